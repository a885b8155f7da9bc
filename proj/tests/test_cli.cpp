#include "cli.hpp"

#include <doctest.h>
#include <json.hpp>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out, err;
  json doc() const { return json::parse(out); }
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "toric");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = toric::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(TORIC_TEST_DATA) + "/" + name; }

}  // namespace

TEST_CASE("classify-cone on the sphere cone") {
  const auto r = run({"classify-cone", "--input", data("sphere_cone3.json")});
  CHECK(r.code == 0);
  CHECK(r.doc() == json::parse(R"({"strictly_convex":true,"good":true,"lineality":0,"reeb_type":true})"));
}

TEST_CASE("classify-cone from catalog specs") {
  CHECK(run({"classify-cone", "--spec", "product:3"}).doc()["lineality"] == 1);
  CHECK(run({"classify-cone", "--spec", "tk:4:2"}).doc()["lineality"] == 4);
  const auto cos = run({"classify-cone", "--spec", "cosphere:3"}).doc();
  CHECK(cos["lineality"] == 3);
  CHECK(cos["reeb_type"] == false);
}

TEST_CASE("probe-scan on the simplex at q = 3 leaves only the barycenter") {
  const auto r = run({"probe-scan", "--polytope", data("simplex2.json"), "--denominator", "3", "--radius", "3"});
  REQUIRE(r.code == 0);
  const auto s = r.doc()["summary"];
  CHECK(s["undisplaced"] == 1);
  CHECK(s["undisplaced_points"] == json::parse(R"([["1/3","1/3"]])"));
}

TEST_CASE("probe-scan summary counts agree with the point list") {
  const auto doc = run({"probe-scan", "--polytope", data("simplex2.json"), "--denominator", "9"}).doc();
  std::size_t displaced = 0;
  for (const auto& p : doc["points"]) displaced += p["displaceable"].get<bool>() ? 1 : 0;
  CHECK(doc["summary"]["total"] == doc["points"].size());
  CHECK(doc["summary"]["displaceable"] == displaced);
  CHECK(doc["summary"]["undisplaced"] == 1);
}

TEST_CASE("verify-giroux with t auto passes at T + 0.01") {
  const auto r = run({"verify-giroux", "--d", "2", "--fiber", "1/2,1/2", "--t", "auto"});
  CHECK(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["passed"] == true);
  CHECK(doc["values"]["t"].get<double>() == doctest::Approx(doc["values"]["T"].get<double>() + 0.01).epsilon(1e-15));
  CHECK(doc["values"]["T"].get<double>() == doctest::Approx(1.7773).epsilon(1e-4));
}

TEST_CASE("verification failure exits 1 and still emits the report") {
  const auto r = run({"verify-giroux", "--d", "2", "--fiber", "1/2,1/2", "--t", "0.5", "--samples", "100"});
  CHECK(r.code == 1);
  CHECK(r.doc()["passed"] == false);
  const auto z = run({"check-beta-g", "--profile", "zero", "--grid", "50"});
  CHECK(z.code == 1);
  CHECK(z.doc()["passed"] == false);
}

TEST_CASE("usage and input errors exit 2 with an error document") {
  SUBCASE("unknown flag") {
    const auto r = run({"classify-cone", "--input", data("sphere_cone3.json"), "--verbose"});
    CHECK(r.code == 2);
    CHECK(r.doc()["error"]["code"] == "UsageError");
  }
  SUBCASE("missing verb") { CHECK(run({}).code == 2); }
  SUBCASE("unknown verb") { CHECK(run({"displace"}).code == 2); }
  SUBCASE("schema violation carries a pointer") {
    const auto r = run({"classify-cone", "--input", data("simplex2.json")});
    CHECK(r.code == 2);
    CHECK(r.doc()["error"]["code"] == "SchemaViolation");
    CHECK(r.doc()["error"].contains("pointer"));
  }
  SUBCASE("fiber off the sphere") {
    const auto r = run({"classify", "--spec", "sphere:2", "--fiber", "1/2,1/3"});
    CHECK(r.code == 2);
    CHECK(r.doc()["error"]["code"] == "InvariantViolation");
  }
  SUBCASE("bad number") { CHECK(run({"flow", "--point", "1,zero,0,0"}).code == 2); }
}

TEST_CASE("classify with the documented fiber flags") {
  const auto r = run({"classify", "--spec", "sphere:3", "--fiber", "1/3,1/3,1/3"});
  CHECK(r.code == 0);
  const auto doc = r.doc();
  CHECK(doc["verdict"]["status"] == "Displaceable");
  CHECK(doc["reverified"] == true);
  const auto cos = run({"classify-fiber", "--spec", "cosphere:2", "--extra", "3/5,4/5"}).doc();
  CHECK(cos["verdict"]["status"] == "NonDisplaceable");
}

TEST_CASE("output is byte-identical across runs with the same seed") {
  const std::vector<std::string> cmd = {"verify-contacto", "--d", "2", "--map", "giroux", "--t", "1", "--samples", "50", "--seed", "7"};
  CHECK(run(cmd).out == run(cmd).out);
  const std::vector<std::string> fl = {"flow", "--d", "3", "--T", "0.2", "--dt", "0.01", "--seed", "3"};
  CHECK(run(fl).out == run(fl).out);
  auto other = cmd;
  other.back() = "8";
  CHECK(run(cmd).out != run(other).out);
}

TEST_CASE("flow of the moment Hamiltonian keeps the moment map") {
  const auto doc = run({"flow", "--d", "2", "--field", "moment", "--coord", "2", "--T", "0.25", "--dt", "0.005"}).doc();
  CHECK(doc["moment_drift"].get<double>() < 1e-8);
  CHECK(doc["max_drift"].get<double>() < 1e-10);
}

TEST_CASE("report summarizes and writes series") {
  const std::string path = "test_cli_report.json", csv = "test_cli_series.csv";
  std::ofstream(path) << run({"check-beta-g", "--grid", "20"}).out;
  const auto r = run({"report", path, "--series", "beta-g", "--points", "4", "--csv", csv});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("OK", 0) == 0);
  std::ifstream in(csv);
  std::string header, row;
  std::getline(in, header);
  CHECK(header == "h,E");
  int n = 0;
  while (std::getline(in, row)) {
    const double h = std::stod(row.substr(0, row.find(','))), e = std::stod(row.substr(row.find(',') + 1));
    CHECK(e == doctest::Approx(1 + h * h).epsilon(1e-12));
    ++n;
  }
  CHECK(n == 5);

  std::ofstream(path) << run({"probe-scan", "--polytope", data("simplex2.json"), "--denominator", "3"}).out;
  const auto scan = run({"report", path});
  CHECK(scan.out.find("displaceable=0 undisplaced=1") != std::string::npos);

  const auto dt = run({"report", "--series", "displacement-time", "--points", "4", "--csv", csv});
  CHECK(dt.code == 0);
}
