#include "qhci/cli.hpp"

#include "qhci/euler.hpp"
#include "qhci/io.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

namespace qhci {

namespace {

struct CommonOptions {
  int dim = 0;
  std::vector<int> degrees;
  std::string format = "json";
  std::string cache;
};

void add_common(CLI::App* sub, CommonOptions& opt) {
  sub->add_option("--dim", opt.dim, "Dimension r of the complete intersection")->required();
  sub->add_option("--degrees", opt.degrees, "Degrees m_1,...,m_L")
      ->required()
      ->delimiter(',');
  sub->add_option("--format", opt.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "text"}));
  sub->add_option("--cache", opt.cache, "JSON file of two-point invariants to load and update");
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void write_terms_csv(std::ostream& out, const std::string& label, const Json& element) {
  for (const auto& t : element["terms"]) {
    out << label << ',' << element["basis"].get<std::string>() << ','
        << t["basis_index"].get<int>() << ',' << t["q_power"].get<int>() << ','
        << t["value"].get<std::string>() << '\n';
  }
}

std::string element_text(const Json& element) {
  const std::string sym = element["basis"] == "H_star" ? "H" : "(H+m!q)";
  std::string s;
  for (const auto& t : element["terms"]) {
    if (!s.empty()) s += " + ";
    s += "(" + t["value"].get<std::string>() + ")";
    const int p = t["q_power"].get<int>();
    const int i = t["basis_index"].get<int>();
    if (p > 0) s += " q^" + std::to_string(p);
    if (i > 0) s += " " + sym + "^" + std::to_string(i);
  }
  return s.empty() ? "0" : s;
}

class Runner {
public:
  Runner(const CommonOptions& opt, std::ostream& out)
      : opt_(opt), out_(out), space_(validate_space(opt.dim, opt.degrees)), table_(space_, 1) {
    if (!opt_.cache.empty()) load_cache(opt_.cache, table_);
  }

  void finish() {
    if (!opt_.cache.empty()) save_cache(opt_.cache, table_);
  }

  void info() {
    const Json s = space_json(space_);
    if (opt_.format == "json") {
      emit(document(space_, "info", {{"label", space_.label()}}));
    } else if (opt_.format == "csv") {
      out_ << "key,value\n";
      for (const auto& [k, v] : s.items()) out_ << k << ',' << csv_field(scalar(v)) << '\n';
    } else {
      out_ << space_.label() << '\n';
      for (const auto& [k, v] : s.items()) out_ << "  " << k << " = " << scalar(v) << '\n';
    }
  }

  void euler(bool both_routes) {
    const ContextPtr ctx = RingContext::make(space_, Basis::HStar);
    Json payload;
    payload["closed"] = ring_element_json(euler_closed(ctx));
    if (space_.borderline) payload["shifted"] = ring_element_json(euler_shifted(ctx));
    if (both_routes) {
      const RingElement built = euler_constructive(ctx, table_);
      payload["constructive"] = ring_element_json(built);
      payload["routes_agree"] = built == euler_closed(ctx);
    }
    if (opt_.format == "json") {
      emit(document(space_, "euler", std::move(payload)));
    } else if (opt_.format == "csv") {
      out_ << "route,basis,basis_index,q_power,value\n";
      for (const char* route : {"closed", "shifted", "constructive"}) {
        if (payload.contains(route)) write_terms_csv(out_, route, payload[route]);
      }
    } else {
      out_ << "E(" << space_.label() << ")\n";
      for (const char* route : {"closed", "shifted", "constructive"}) {
        if (payload.contains(route)) out_ << "  " << route << ": " << element_text(payload[route]) << '\n';
      }
      if (payload.contains("routes_agree")) {
        out_ << "  routes agree: " << (payload["routes_agree"].get<bool>() ? "yes" : "NO") << '\n';
      }
    }
  }

  void tevelev(int g, int n) {
    k_of(space_, g, n);  // validate before touching the ring
    const TevelevSolver solver(RingContext::make(space_, Basis::HStar), table_);
    const TevelevBreakdown bd = solver.solve({g, n});
    const Json payload = tevelev_json(bd);
    if (opt_.format == "json") {
      emit(document(space_, "tevelev", payload));
    } else if (opt_.format == "csv") {
      out_ << "field,index,value\n";
      out_ << "k,," << bd.k << '\n';
      for (std::size_t i = 0; i < bd.P.size(); ++i) out_ << "P," << i << ',' << to_string(bd.P[i]) << '\n';
      for (std::size_t i = 0; i < bd.b.size(); ++i) out_ << "b," << i << ',' << to_string(bd.b[i]) << '\n';
      out_ << "disc,," << to_string(bd.disc) << '\n';
      out_ << "value,," << to_string(bd.value_direct) << '\n';
    } else {
      out_ << "vTev(" << space_.label() << ", g=" << g << ", n=" << n << ", k=" << bd.k
           << ") = " << to_string(bd.value_direct) << '\n';
      out_ << "  disc = " << to_string(bd.disc)
           << ", closed formula " << (bd.routes_agree() ? "agrees" : "DISAGREES") << '\n';
    }
  }

  void gw(int k_max) {
    fill_levels_parallel(table_, k_max);
    const Json payload = gw_table_json(table_, k_max);
    if (opt_.format == "json") {
      emit(document(space_, "gw", payload));
    } else if (opt_.format == "csv") {
      out_ << "table,k,a,i,j,value\n";
      const int r = space_.r;
      const int d = space_.fano_index;
      for (const auto& row : payload["alpha"]) {
        const int k = row["k"].get<int>();
        for (int s = 0; s <= r; ++s) {
          out_ << "alpha," << k << ",0," << k * d + r - s - 1 << ',' << s << ','
               << row["values"][s].get<std::string>() << '\n';
        }
      }
      for (const auto& e : payload["descendants"]) {
        out_ << "descendant," << e["k"].get<int>() << ',' << e["a"].get<int>() << ','
             << e["i"].get<int>() << ',' << e["j"].get<int>() << ','
             << e["value"].get<std::string>() << '\n';
      }
    } else {
      out_ << "alpha^k_s for " << space_.label() << '\n';
      for (const auto& row : payload["alpha"]) {
        out_ << "  k=" << row["k"].get<int>() << ':';
        for (const auto& v : row["values"]) out_ << ' ' << v.get<std::string>();
        out_ << '\n';
      }
      out_ << "  " << payload["descendants"].size() << " descendants stored\n";
    }
  }

  bool verify() {
    const VerifyReport report = run_verify(space_, table_);
    if (opt_.format == "json") {
      emit(document(space_, "verify", verify_json(report)));
    } else if (opt_.format == "csv") {
      out_ << "check,status,detail\n";
      for (const auto& c : report.checks) {
        out_ << c.name << ',' << status_name(c.status) << ',' << csv_field(c.detail) << '\n';
      }
    } else {
      out_ << "verify " << space_.label() << '\n';
      for (const auto& c : report.checks) {
        out_ << "  [" << status_name(c.status) << "] " << c.name;
        if (!c.detail.empty()) out_ << ": " << c.detail;
        out_ << '\n';
      }
      out_ << (report.passed() ? "all checks passed" : std::to_string(report.failures()) + " failed")
           << '\n';
    }
    return report.passed();
  }

private:
  static std::string scalar(const Json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  void emit(const Json& doc) { out_ << doc.dump(2) << '\n'; }

  const CommonOptions& opt_;
  std::ostream& out_;
  FanoSpace space_;
  GWTable table_;
};

bool is_internal(ErrorCode code) {
  switch (code) {
    case ErrorCode::InconsistentKey:
    case ErrorCode::ContextMismatch:
    case ErrorCode::InsufficientOrder:
    case ErrorCode::ZeroConstantTerm:
    case ErrorCode::OutOfRange:
      return true;
    default:
      return false;
  }
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quantum cohomology of Fano complete intersections"};
  app.name("qhci");
  app.require_subcommand(1);

  CommonOptions opt;
  bool both_routes = false;
  int genus = 0;
  int points = 0;
  int k_max = 1;

  auto* info = app.add_subcommand("info", "Scalar invariants of the space");
  auto* euler = app.add_subcommand("euler", "Quantum Euler class");
  auto* tev = app.add_subcommand("tevelev", "Virtual Tevelev degree");
  auto* gw = app.add_subcommand("gw", "Two-point descendant invariants");
  auto* verify = app.add_subcommand("verify", "Run every identity check on the space");
  for (auto* sub : {info, euler, tev, gw, verify}) add_common(sub, opt);
  euler->add_flag("--both-routes", both_routes, "Also build E from the diagonal and compare");
  tev->add_option("--genus", genus, "Genus g")->required();
  tev->add_option("--points", points, "Number of marked points n")->required();
  gw->add_option("--k", k_max, "Largest curve degree")->required()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    out << error_json(ErrorCode::Usage, e.what()).dump(2) << '\n';
    err << "qhci: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    Runner runner(opt, out);
    int code = kExitOk;
    if (info->parsed()) {
      runner.info();
    } else if (euler->parsed()) {
      runner.euler(both_routes);
    } else if (tev->parsed()) {
      runner.tevelev(genus, points);
    } else if (gw->parsed()) {
      runner.gw(k_max);
    } else if (!runner.verify()) {
      code = kExitVerifyFailed;
    }
    runner.finish();
    return code;
  } catch (const Error& e) {
    out << error_json(e.code(), e.what()).dump(2) << '\n';
    err << "qhci: " << e.what() << '\n';
    return is_internal(e.code()) ? kExitInternal : kExitValidation;
  } catch (const std::exception& e) {
    err << "qhci: internal error: " << e.what() << '\n';
    return kExitInternal;
  }
}

}  // namespace qhci
