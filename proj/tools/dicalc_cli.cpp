#include "dicalc/dicalc.hpp"
int main() { return 0; }
