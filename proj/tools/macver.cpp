// Command-line front end. Talks to the library only through macver.h.
#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "macver/macver.h"

namespace {

using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInternal = 3;

struct Options {
  std::string order;
  std::string scale = "1";
  std::string lattice_scale;
  std::string weyl_cap;
  std::string threads;
  std::string as;
  std::string sigma = "flip";
  int max_level = 1;
  bool json = false;
};

int fail(macver_status st) {
  std::cerr << "macver: " << macver_last_error() << "\n";
  return st == MACVER_ERR_INTERNAL ? kExitInternal : kExitUsage;
}

// Takes ownership of a library string.
std::string take(char* s) {
  std::string out = s ? s : "";
  macver_free(s);
  return out;
}

class Config {
 public:
  Config() { macver_config_create(&cfg_); }
  ~Config() { macver_config_destroy(cfg_); }
  Config(const Config&) = delete;
  Config& operator=(const Config&) = delete;
  macver_status set(const char* key, const std::string& value) {
    if (value.empty()) return MACVER_OK;
    return macver_config_set(cfg_, key, value.c_str());
  }
  const macver_config* get() const { return cfg_; }

 private:
  macver_config* cfg_ = nullptr;
};

macver_status configure(Config& cfg, const Options& o) {
  for (const auto& [key, value] :
       std::vector<std::pair<const char*, std::string>>{{"order", o.order},
                                                        {"scale", o.scale},
                                                        {"lattice_scale", o.lattice_scale},
                                                        {"weyl_cap", o.weyl_cap},
                                                        {"threads", o.threads}}) {
    const macver_status st = cfg.set(key, value);
    if (st != MACVER_OK) return st;
  }
  return MACVER_OK;
}

std::string rational_text(const json& num, const json& den) {
  if (num.is_number_integer() && den.is_number_integer()) {
    long long n = num.get<long long>(), d = den.get<long long>();
    long long a = n < 0 ? -n : n, b = d;
    while (b != 0) {
      long long t = a % b;
      a = b;
      b = t;
    }
    if (a > 1) {
      n /= a;
      d /= a;
    }
    return d == 1 ? std::to_string(n) : std::to_string(n) + "/" + std::to_string(d);
  }
  return (num.is_string() ? num.get<std::string>() : num.dump()) + "/" +
         (den.is_string() ? den.get<std::string>() : den.dump());
}

std::string value_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_series(const json& s, std::size_t limit) {
  std::size_t shown = 0;
  for (const auto& t : s["terms"]) {
    if (shown++ == limit) {
      std::cout << "    ... (" << s["terms"].size() << " terms)\n";
      break;
    }
    std::string coeff = value_text(t[1]);
    if (!(t[2].is_number_integer() && t[2].get<long long>() == 1)) coeff += "/" + value_text(t[2]);
    std::cout << "    q^" << rational_text(t[0], s["denominator"]) << "  " << coeff << "\n";
  }
  if (!s["order_num"].is_null())
    std::cout << "    + O(q^" << rational_text(s["order_num"], s["denominator"]) << ")\n";
}

void print_report(const json& r) {
  std::cout << r.value("identity", "") << " " << r.value("type", "") << ": " << r.value("verdict", "")
            << "\n";
  for (const char* key : {"order", "cutoff", "ratio", "expected", "algebra", "dimension",
                          "dual_coxeter_number", "source", "source_coxeter_number",
                          "coxeter_number", "short_roots", "long_roots", "short_simple",
                          "long_simple", "lattice_points_enumerated", "terms_compared", "wall_ms"})
    if (r.contains(key)) std::cout << "  " << key << ": " << value_text(r[key]) << "\n";
  if (r.contains("facts"))
    for (const auto& [k, v] : r["facts"].items()) std::cout << "  " << k << ": " << value_text(v) << "\n";
  if (r.contains("checks"))
    for (const auto& c : r["checks"])
      std::cout << "  check " << c["check"].get<std::string>() << ": "
                << (c["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
  if (r.contains("first_mismatch") && !r["first_mismatch"].is_null()) {
    const json& m = r["first_mismatch"];
    std::cout << "  first mismatch at q^" << rational_text(m["exponent_num"], m["denom"])
              << ": lhs " << value_text(m["lhs_coeff"]) << ", rhs " << value_text(m["rhs_coeff"]);
    if (m.contains("weight")) std::cout << ", weight " << m["weight"].dump();
    std::cout << "\n";
  }
  if (r.contains("rhs")) {
    std::cout << "  rhs (lattice sum):\n";
    print_series(r["rhs"], 8);
  }
}

int cmd_info(const std::string& label, const Options& o) {
  json j;
  if (label.find('(') != std::string::npos) {
    macver_affine* sys = nullptr;
    macver_status st = macver_affine_create(label.c_str(), o.scale.c_str(), &sys);
    if (st != MACVER_OK) return fail(st);
    char* out = nullptr;
    st = macver_affine_info_json(sys, &out);
    macver_affine_destroy(sys);
    if (st != MACVER_OK) return fail(st);
    j = json::parse(take(out));
    if (!o.as.empty()) {
      char* name = nullptr;
      st = macver_nomenclature(label.c_str(), o.as.c_str(), &name);
      if (st != MACVER_OK) return fail(st);
      j["as"] = take(name);
    }
  } else {
    macver_finite* rs = nullptr;
    macver_status st = macver_finite_create(label.c_str(), o.scale.c_str(), &rs);
    if (st != MACVER_OK) return fail(st);
    char* out = nullptr;
    st = macver_finite_info_json(rs, &out);
    macver_finite_destroy(rs);
    if (st != MACVER_OK) return fail(st);
    j = json::parse(take(out));
  }
  if (o.json) {
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& [k, v] : j.items()) std::cout << k << ": " << value_text(v) << "\n";
  }
  return kExitOk;
}

int cmd_roots(const std::string& label, const Options& o) {
  std::string text;
  if (label.find('(') != std::string::npos) {
    macver_affine* sys = nullptr;
    macver_status st = macver_affine_create(label.c_str(), o.scale.c_str(), &sys);
    if (st != MACVER_OK) return fail(st);
    char* out = nullptr;
    st = macver_affine_roots_json(sys, o.max_level, &out);
    macver_affine_destroy(sys);
    if (st != MACVER_OK) return fail(st);
    text = take(out);
  } else {
    macver_finite* rs = nullptr;
    macver_status st = macver_finite_create(label.c_str(), o.scale.c_str(), &rs);
    if (st != MACVER_OK) return fail(st);
    char* out = nullptr;
    st = macver_finite_roots_json(rs, &out);
    macver_finite_destroy(rs);
    if (st != MACVER_OK) return fail(st);
    text = take(out);
  }
  if (o.json) {
    std::cout << text << "\n";
    return kExitOk;
  }
  const json j = json::parse(text);
  std::cout << j["type"].get<std::string>() << ": " << j["count"] << " roots\n";
  for (const auto& r : j["roots"]) {
    std::cout << "  " << r["coords"].dump() << "  " << r["stratum"].get<std::string>();
    if (r.contains("level")) std::cout << "  level " << r["level"];
    if (r.contains("norm2")) std::cout << "  norm2 " << value_text(r["norm2"]);
    std::cout << "\n";
  }
  return kExitOk;
}

int cmd_fold(const std::string& label, const Options& o) {
  char* out = nullptr;
  const macver_status st = macver_fold_json(label.c_str(), o.sigma.c_str(), &out);
  if (st != MACVER_OK) return fail(st);
  const std::string text = take(out);
  if (o.json) {
    std::cout << text << "\n";
    return kExitOk;
  }
  const json j = json::parse(text);
  std::cout << label << " folded by " << o.sigma << "\n";
  for (const char* kind : {"sum", "mean"}) {
    const json& f = j[kind];
    std::cout << "  " << kind << ": " << f["identified"].get<std::string>();
    if (f.contains("type")) std::cout << " = " << f["type"].get<std::string>();
    std::cout << "  (matches " << f["matches"].dump() << ", " << f["roots"] << " image roots";
    if (f.contains("roots_match")) std::cout << ", root sets agree: " << f["roots_match"];
    std::cout << ")\n";
  }
  std::cout << "  duality: " << (j["duality"].get<bool>() ? "holds" : "FAILS") << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& identity, const std::string& label, const Options& o) {
  Config cfg;
  if (macver_status st = configure(cfg, o); st != MACVER_OK) return fail(st);
  macver_report* report = nullptr;
  const macver_status st = macver_verify(identity.c_str(), label.c_str(), cfg.get(), &report);
  if (st != MACVER_OK && st != MACVER_MISMATCH) return fail(st);
  char* out = nullptr;
  macver_report_json(report, &out);
  macver_report_destroy(report);
  const std::string text = take(out);
  if (o.json) std::cout << text << "\n";
  else print_report(json::parse(text));
  return st == MACVER_OK ? kExitOk : kExitMismatch;
}

int cmd_expand(const std::string& side, const std::string& label, const Options& o) {
  Config cfg;
  if (macver_status st = configure(cfg, o); st != MACVER_OK) return fail(st);
  char* out = nullptr;
  const macver_status st = macver_expand_json(side.c_str(), label.c_str(), cfg.get(), &out);
  if (st != MACVER_OK) return fail(st);
  const std::string text = take(out);
  if (o.json) {
    std::cout << text << "\n";
  } else {
    std::cout << side << " " << label << ":\n";
    print_series(json::parse(text), static_cast<std::size_t>(-1));
  }
  return kExitOk;
}

void print_table(const std::vector<std::string>& header, const json& rows) {
  std::vector<std::size_t> width(header.size());
  for (std::size_t c = 0; c < header.size(); ++c) {
    width[c] = header[c].size();
    for (const auto& r : rows) width[c] = std::max(width[c], value_text(r[header[c]]).size());
  }
  auto line = [&](auto cell) {
    for (std::size_t c = 0; c < header.size(); ++c) {
      const std::string s = cell(c);
      std::cout << s << std::string(width[c] - s.size() + 2, ' ');
    }
    std::cout << "\n";
  };
  line([&](std::size_t c) { return header[c]; });
  for (const auto& r : rows) line([&](std::size_t c) { return value_text(r[header[c]]); });
}

int cmd_table(const std::string& name, const Options& o) {
  char* out = nullptr;
  const macver_status st = macver_table_json(name.c_str(), &out);
  if (st != MACVER_OK) return fail(st);
  const std::string text = take(out);
  if (o.json) {
    std::cout << text << "\n";
    return kExitOk;
  }
  const json j = json::parse(text);
  if (name == "folding")
    print_table({"source", "automorphism", "sum_finite", "mean_finite", "sum_affine", "mean_affine",
                 "reproduced"},
                j);
  else if (name == "nomenclature")
    print_table({"saito", "kac", "moody", "macdonald", "carter"}, j);
  else
    print_table({"root_system", "superalgebra"}, j);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of denominator and Macdonald identities for root systems"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(macver_version()));
  Options o;
  if (const char* env = std::getenv("MACVER_THREADS")) o.threads = env;

  std::string label, identity, side, table_name;
  auto add_common = [&](CLI::App* sub) {
    sub->add_flag("--json", o.json, "Machine-readable JSON output");
    sub->add_option("--scale", o.scale, "Normalization: I(theta, theta) = 2 * scale (p or p/q)");
  };

  auto* info = app.add_subcommand("info", "Labels, Cartan data and Weyl vector of a type");
  info->add_option("type", label, "Saito label such as A3(1), or a finite type such as E6")->required();
  info->add_option("--as", o.as, "Also print the name in kac, moody, macdonald or carter notation");
  add_common(info);

  auto* roots = app.add_subcommand("roots", "List roots (affine: levels up to --max-level)");
  roots->add_option("type", label)->required();
  roots->add_option("--max-level", o.max_level, "Largest |level| listed for affine types");
  add_common(roots);

  auto* fold = app.add_subcommand("fold", "Fold a system by a diagram automorphism");
  fold->add_option("type", label)->required();
  fold->add_option("--sigma", o.sigma, "flip, triality, or bc (for D_{2l+2}(1))");
  fold->add_flag("--json", o.json);

  auto* verify = app.add_subcommand("verify", "Verify an identity");
  verify->add_option("identity", identity, "denominator, macdonald, strange, dual-coxeter or census")
      ->required();
  verify->add_option("type", label)->required();
  auto* expand = app.add_subcommand("expand", "Expand one side of an identity as a q-series");
  expand->add_option("side", side, "lhs, rhs, or eta (type is then the scale s of eta(q^s))")->required();
  expand->add_option("type", label)->required();
  for (auto* sub : {verify, expand}) {
    add_common(sub);
    sub->add_option("--order", o.order, "Truncation order (default 20; 5 for affine denominators)");
    sub->add_option("--weyl-cap", o.weyl_cap, "Largest Weyl group enumerated (default 1000000)");
    sub->add_option("--threads", o.threads, "Worker threads (default $MACVER_THREADS or 1)");
    sub->add_option("--lattice-scale", o.lattice_scale, "Lattice scale override (BC types only)");
  }

  auto* table = app.add_subcommand("table", "Print a reference table");
  table->add_option("name", table_name, "folding, nomenclature or nonreduced")->required();
  table->add_flag("--json", o.json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (info->parsed()) return cmd_info(label, o);
    if (roots->parsed()) return cmd_roots(label, o);
    if (fold->parsed()) return cmd_fold(label, o);
    if (verify->parsed()) return cmd_verify(identity, label, o);
    if (expand->parsed()) return cmd_expand(side, label, o);
    if (table->parsed()) return cmd_table(table_name, o);
  } catch (const std::exception& e) {
    std::cerr << "macver: " << e.what() << "\n";
    return kExitInternal;
  }
  return kExitUsage;
}
