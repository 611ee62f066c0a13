#include <iostream>

#include "sv2/cli.hpp"

int main(int argc, char **argv)
{
	return sv2::cli::run({argv + 1, argv + argc}, std::cin, std::cout, std::cerr);
}
