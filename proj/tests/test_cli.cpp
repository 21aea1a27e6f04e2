#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <filesystem>

#include "quandles/io.hpp"
#include "support.hpp"

using namespace quandles;
using testsupport::fresh_temp_dir;
using testsupport::make_r3;
using testsupport::make_r4;
using testsupport::run_cli;
using testsupport::write_file;

namespace {

std::string cli_binary() {
  const char* bin = std::getenv("QUANDLES_CLI_BIN");
  REQUIRE_MESSAGE(bin != nullptr, "QUANDLES_CLI_BIN must point at the CLI binary");
  return bin;
}

}  // namespace

TEST_CASE("command exit codes") {
  const std::string bin = cli_binary();
  auto dir = fresh_temp_dir("quandles_cli");

  write_file(dir / "r3.json", serialize_quandle_document({"R3", std::nullopt, make_r3()}));
  write_file(dir / "r4.json", serialize_quandle_document({"R4", std::nullopt, make_r4()}));
  write_file(dir / "broken.json", "{ not json");
  write_file(dir / "axiom.json", R"({"size": 2, "table": [[0, 0], [0, 1]]})");
  write_file(dir / "g_identity.json", R"({
    "source": "r3.json", "target": "r3.json", "map": [0, 1, 2]})");
  write_file(dir / "h_collapse.json", R"({
    "source": "r3.json", "target": {"size": 1, "table": [[0]]}, "map": [0, 0, 0]})");

  CHECK(run_cli(bin, "validate " + (dir / "r3.json").string(), dir).exit_code == 0);
  CHECK(run_cli(bin, "validate " + (dir / "broken.json").string(), dir).exit_code == 1);
  CHECK(run_cli(bin, "validate " + (dir / "axiom.json").string(), dir).exit_code == 2);

  CHECK(run_cli(bin, "inn " + (dir / "r3.json").string(), dir).exit_code == 0);
  {
    auto result = run_cli(bin, "inn --json " + (dir / "r4.json").string(), dir);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"connected\": false") != std::string::npos);
  }

  CHECK(run_cli(bin, "present " + (dir / "r3.json").string(), dir).exit_code == 0);
  CHECK(run_cli(bin, "present " + (dir / "r4.json").string(), dir).exit_code == 3);

  CHECK(run_cli(bin, "closure " + (dir / "r3.json").string() + " --subgroup \"(0 1 2)\"", dir)
            .exit_code == 0);
  CHECK(run_cli(bin, "closure " + (dir / "r3.json").string() + " --subgroup \"(1 2)\"", dir)
            .exit_code == 4);

  CHECK(run_cli(bin,
                "factor " + (dir / "h_collapse.json").string() + " " +
                    (dir / "g_identity.json").string(),
                dir)
            .exit_code == 0);
  CHECK(run_cli(bin,
                "factor " + (dir / "g_identity.json").string() + " " +
                    (dir / "h_collapse.json").string(),
                dir)
            .exit_code == 5);

  {
    auto result = run_cli(bin, "enumerate 3 --method both --json", dir);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("\"count\": 1") != std::string::npos);
  }

  {
    auto result = run_cli(bin,
                          "factor --trace " + (dir / "h_collapse.json").string() + " " +
                              (dir / "g_identity.json").string(),
                          dir);
    CHECK(result.exit_code == 0);
    CHECK(result.output.find("pipeline:") != std::string::npos);
  }

  // The element-cap override is honored.
  CHECK(run_cli("QUANDLES_ELEMENT_CAP=2 " + bin, "inn " + (dir / "r3.json").string(), dir)
            .exit_code == 64);

  CHECK(run_cli(bin, "no-such-command", dir).exit_code == 64);
  std::filesystem::remove_all(dir);
}
