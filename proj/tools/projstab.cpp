#include <iostream>
#include <string>
#include <vector>

#include <projstab/cli/driver.hpp>

int main(int argc, char **argv)
{
    return projstab::cli::run(std::vector<std::string>(argv, argv + argc), std::cout, std::cerr);
}
