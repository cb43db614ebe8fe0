#include "mwkit/mwkit.hpp"
int main(){return 0;}
