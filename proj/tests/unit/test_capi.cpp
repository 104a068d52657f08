// Exercises the shared library through the public header only.
// Set MACVER_UPDATE_GOLDEN=1 to rewrite the golden reports.
#include <macver/macver.h>

#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <json.hpp>

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
  if (!ok) {
    ++failures;
    std::cerr << "FAIL: " << what << "\n";
  }
}

std::string take(char* text) {
  std::string s = text ? text : "";
  macver_free(text);
  return s;
}

std::string stripped(const std::string& report) {
  nlohmann::json j = nlohmann::json::parse(report);
  j.erase("wall_ms");
  return j.dump(1);
}

void golden(const char* label, const char* order, const std::string& file) {
  macver_config* cfg = nullptr;
  expect(macver_config_create(&cfg) == MACVER_OK, "config_create");
  expect(macver_config_set(cfg, "order", order) == MACVER_OK, "config_set order");
  macver_report* rep = nullptr;
  const macver_status st = macver_verify("macdonald", label, cfg, &rep);
  expect(st == MACVER_OK, std::string("macdonald ") + label);
  char* text = nullptr;
  expect(macver_report_json(rep, &text) == MACVER_OK, "report_json");
  const std::string got = stripped(take(text));
  macver_report_destroy(rep);
  macver_config_destroy(cfg);

  const std::string path = std::string(MACVER_GOLDEN_DIR) + "/" + file;
  const char* update = std::getenv("MACVER_UPDATE_GOLDEN");
  if (update && std::strcmp(update, "1") == 0) {
    std::ofstream(path) << got << "\n";
    return;
  }
  std::ifstream in(path);
  expect(static_cast<bool>(in), "missing golden file " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  expect(stripped(buf.str()) == got, "golden mismatch for " + std::string(label));
}

}  // namespace

int main() {
  expect(std::strlen(macver_version()) > 0, "version");

  // Handles.
  macver_affine* a = nullptr;
  expect(macver_affine_create("G2(3)", nullptr, &a) == MACVER_OK, "affine_create");
  char* text = nullptr;
  expect(macver_affine_info_json(a, &text) == MACVER_OK, "affine_info_json");
  const auto info = nlohmann::json::parse(take(text));
  expect(info.contains("type"), "info has a type");
  expect(macver_affine_roots_json(a, 2, &text) == MACVER_OK, "affine_roots_json");
  expect(nlohmann::json::parse(take(text)).is_object(), "roots json");
  macver_affine_destroy(a);

  macver_finite* f = nullptr;
  expect(macver_finite_create("F4", "1/3", &f) == MACVER_OK, "finite_create");
  expect(macver_finite_info_json(f, &text) == MACVER_OK, "finite_info_json");
  take(text);
  macver_finite_destroy(f);

  // Error codes.
  expect(macver_affine_create("Z9(9)", nullptr, &a) == MACVER_ERR_USAGE, "bad label");
  expect(std::strstr(macver_last_error(), "legal labels") != nullptr, "last_error names legal labels");
  expect(macver_affine_create("A2(1)", "-1", &a) == MACVER_ERR_USAGE, "negative scale");
  macver_config* cfg = nullptr;
  macver_config_create(&cfg);
  expect(macver_config_set(cfg, "order", "0") == MACVER_ERR_USAGE, "order 0");
  expect(macver_config_set(cfg, "colour", "1") == MACVER_ERR_USAGE, "unknown key");
  macver_report* rep = nullptr;
  expect(macver_verify("denominator", "E7", cfg, &rep) == MACVER_ERR_CAPACITY, "weyl cap");
  expect(macver_verify("strange", "BC2(2)", cfg, &rep) == MACVER_ERR_DOMAIN, "strange on BC");
  expect(macver_verify("nonsense", "A1(1)", cfg, &rep) == MACVER_ERR_USAGE, "unknown identity");

  // A mismatch still yields a report.
  macver_config_set(cfg, "order", "4");
  macver_config_set(cfg, "lattice_scale", "2");
  expect(macver_verify("macdonald", "BC1(2)", cfg, &rep) == MACVER_MISMATCH, "wrong lattice scale");
  expect(rep && macver_report_passed(rep) == 0, "report says failed");
  if (rep) {
    expect(macver_report_json(rep, &text) == MACVER_OK, "mismatch report json");
    const auto j = nlohmann::json::parse(take(text));
    expect(j["verdict"] == "fail" && j["first_mismatch"].is_object(), "mismatch fields");
    macver_report_destroy(rep);
  }
  macver_config_destroy(cfg);

  // Series and tables.
  macver_config_create(&cfg);
  macver_config_set(cfg, "order", "3");
  text = nullptr;
  expect(macver_expand_json("eta", "1/2", cfg, &text) == MACVER_OK, "expand eta");
  expect(nlohmann::json::parse(take(text)).contains("terms"), "eta terms");
  macver_config_destroy(cfg);
  expect(macver_fold_json("D4", "triality", &text) == MACVER_OK, "fold D4");
  take(text);
  expect(macver_table_json("folding", &text) == MACVER_OK, "folding table");
  expect(nlohmann::json::parse(take(text)).size() == 8, "folding table rows");
  expect(macver_nomenclature("B3(2)", "kac", &text) == MACVER_OK, "nomenclature");
  expect(take(text) == "D4(2)", "kac name of B3(2)");

  golden("A1(1)", "20", "macdonald_A1_1.json");
  golden("G2(3)", "20", "macdonald_G2_3.json");
  golden("BC1(2)", "10", "macdonald_BC1_2.json");

  if (failures == 0) std::cout << "capi: all checks passed\n";
  return failures == 0 ? 0 : 1;
}
