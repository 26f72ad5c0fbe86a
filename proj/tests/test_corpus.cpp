#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <sstream>

#include "railknot/corpus.hpp"
#include "railknot/embedding.hpp"

using namespace railknot;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("corpus matches the stored documents") {
  const auto entries = corpus();
  CHECK(entries.size() == 16);
  for (const auto& e : entries) {
    const std::string stored = read_file(std::string(RAILKNOT_DATA_DIR) + "/" + e.name + ".json");
    CHECK_MESSAGE(serialize_diagram(e.diagram) == stored, e.name);
    CHECK(parse_diagram(stored) == e.diagram);
    CHECK(is_planar(e.diagram));
  }
}

TEST_CASE("knotted companion search") {
  const auto found = find_knotted_companion(5);
  REQUIRE(found.has_value());
  CHECK(*found == knotted_companion_witness());
  CHECK(!find_knotted_companion(2).has_value());
}
