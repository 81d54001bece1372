#ifndef GENTLE_TESTS_FIXTURES_HPP
#define GENTLE_TESTS_FIXTURES_HPP

#include <fstream>
#include <sstream>
#include <string>

#include "gentle/dsl.hpp"

namespace gentle_tests {

inline std::string fixture_text(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name + ".gq", std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

inline gentle::BoundQuiver fixture(const std::string& name) {
    return gentle::parse_bound_quiver(fixture_text(name));
}

}  // namespace gentle_tests

#endif
