#ifndef SEMNET_TESTS_FIXTURES_HPP
#define SEMNET_TESTS_FIXTURES_HPP

#include <string>

#include "semnet/network.hpp"

namespace semnet::testing {

inline std::string fixture_path(const std::string& name) {
  return std::string(SEMNET_FIXTURES_DIR) + "/" + name;
}

inline SemanticNetwork load_fixture_network(const std::string& name) {
  return SemanticNetwork::load_file(fixture_path(name));
}

}  // namespace semnet::testing

#endif  // SEMNET_TESTS_FIXTURES_HPP
