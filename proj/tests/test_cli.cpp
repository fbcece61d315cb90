#include "qhci/cli.hpp"
#include "qhci/io.hpp"

#include <doctest.h>

#include <sstream>

using namespace qhci;

namespace {

struct Result {
  int code;
  std::string out;
};

Result invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "qhci");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("euler of the quadric threefold") {
    const Result r = invoke({"euler", "--dim", "3", "--degrees", "2"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    const Json& terms = j["euler"]["closed"]["terms"];
    REQUIRE(terms.size() == 2);
    CHECK(terms[0] == Json({{"basis_index", 3}, {"q_power", 0}, {"value", "2"}}));
    CHECK(terms[1] == Json({{"basis_index", 0}, {"q_power", 1}, {"value", "-2"}}));
    CHECK_FALSE(j["euler"].contains("shifted"));
  }

  TEST_CASE("euler with both routes on an index-one space") {
    const Result r = invoke({"euler", "--dim", "3", "--degrees", "4", "--both-routes"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["euler"]["routes_agree"] == true);
    CHECK(j["euler"]["shifted"]["basis"] == "H_shifted");
  }

  TEST_CASE("tevelev") {
    const Result r =
        invoke({"tevelev", "--dim", "3", "--degrees", "2", "--genus", "0", "--points", "3"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["tevelev"]["value"] == "1");
    CHECK(j["tevelev"]["k"] == 2);

    const Result bad =
        invoke({"tevelev", "--dim", "3", "--degrees", "3", "--genus", "0", "--points", "2"});
    CHECK(bad.code == kExitValidation);
    CHECK(Json::parse(bad.out)["error"]["code"] == "non_integral_k");

    const Result unstable =
        invoke({"tevelev", "--dim", "3", "--degrees", "2", "--genus", "0", "--points", "1"});
    CHECK(unstable.code == kExitValidation);
    CHECK(Json::parse(unstable.out)["error"]["code"] == "unstable");
  }

  TEST_CASE("validation and usage errors") {
    const Result non_fano = invoke({"info", "--dim", "3", "--degrees", "5"});
    CHECK(non_fano.code == kExitValidation);
    CHECK(Json::parse(non_fano.out)["error"]["code"] == "non_fano");

    const Result missing = invoke({"info", "--dim", "3"});
    CHECK(missing.code == kExitValidation);
    CHECK(Json::parse(missing.out)["error"]["code"] == "usage");

    CHECK(invoke({"info", "--dim", "3", "--degrees", "2", "--format", "xml"}).code ==
          kExitValidation);
    CHECK(invoke({"gw", "--dim", "3", "--degrees", "2", "--k", "0"}).code == kExitValidation);
    CHECK(invoke({}).code == kExitValidation);
  }

  TEST_CASE("info and formats") {
    const Result r = invoke({"info", "--dim", "3", "--degrees", "2,2"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["space"]["euler_char"] == "0");
    CHECK(j["space"]["degrees"] == Json({2, 2}));

    const Result csv = invoke({"euler", "--dim", "3", "--degrees", "3", "--format", "csv"});
    CHECK(csv.code == kExitOk);
    CHECK(csv.out == "route,basis,basis_index,q_power,value\n"
                     "closed,H_star,3,0,-2\n"
                     "closed,H_star,1,1,72\n");
    const Result text = invoke({"verify", "--dim", "3", "--degrees", "2", "--format", "text"});
    CHECK(text.code == kExitOk);
    CHECK(text.out.find("all checks passed") != std::string::npos);
  }

  TEST_CASE("gw table") {
    const Result r = invoke({"gw", "--dim", "3", "--degrees", "3", "--k", "2"});
    REQUIRE(r.code == kExitOk);
    const Json j = Json::parse(r.out);
    CHECK(j["gw"]["alpha"][0]["values"] == Json({"0", "6", "15", "6"}));
    CHECK(!j["gw"]["descendants"].empty());
  }

  TEST_CASE("verify exit codes") {
    CHECK(invoke({"verify", "--dim", "3", "--degrees", "3"}).code == kExitOk);
    // H * Gamma keeps a q^{r+1} term on index-one spaces.
    const Result border = invoke({"verify", "--dim", "3", "--degrees", "4"});
    CHECK(border.code == kExitVerifyFailed);
    const Json j = Json::parse(border.out);
    CHECK(j["verify"]["failures"] == 1);
  }

  TEST_CASE("deterministic output and cache") {
    const std::vector<std::string> args = {"gw", "--dim", "4", "--degrees", "2,3", "--k", "3"};
    CHECK(invoke(args).out == invoke(args).out);

    const auto path = std::filesystem::temp_directory_path() / "qhci_cli_cache.json";
    std::filesystem::remove(path);
    const Result first = invoke({"gw", "--dim", "3", "--degrees", "4", "--k", "3", "--cache",
                                 path.string()});
    REQUIRE(first.code == kExitOk);
    CHECK(std::filesystem::exists(path));
    const Result second = invoke({"gw", "--dim", "3", "--degrees", "4", "--k", "3", "--cache",
                                  path.string()});
    CHECK(second.out == first.out);
    const Result verify =
        invoke({"verify", "--dim", "3", "--degrees", "4", "--cache", path.string()});
    CHECK(Json::parse(verify.out)["verify"]["checks"][1]["name"] == "gw.recompute");
    CHECK(Json::parse(verify.out)["verify"]["checks"][1]["status"] == "pass");

    const Result mismatch =
        invoke({"info", "--dim", "3", "--degrees", "3", "--cache", path.string()});
    CHECK(mismatch.code == kExitValidation);
    CHECK(Json::parse(mismatch.out)["error"]["code"] == "cache_mismatch");
    std::filesystem::remove(path);
  }
}
