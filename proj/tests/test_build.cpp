#include <catch2/catch_amalgamated.hpp>
#include "mwkit/mwkit.hpp"
#include "support/test_support.hpp"
