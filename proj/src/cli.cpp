#include "superschur/cli.hpp"

#include "superschur/json_io.hpp"
#include "superschur/kostant.hpp"
#include "superschur/qalgebra.hpp"
#include "superschur/qreplift.hpp"
#include "superschur/replift.hpp"

#include <CLI11.hpp>

#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>

namespace superschur {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string &s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw UsageError("--q0: not a rational number: " + s);
  if (r.get_den() == 0)
    throw UsageError("--q0: zero denominator");
  r.canonicalize();
  return r;
}

Dims make_dims(const RunConfig &cfg) {
  if (cfg.m < 1 || cfg.n < 1)
    throw UsageError("need m >= 1 and n >= 1");
  if (cfg.d < 0)
    throw UsageError("need d >= 0");
  Dims dims(cfg.m, cfg.n, cfg.d);
  // (m+n)^d without overflow: stop multiplying once past the limit.
  std::size_t size = 1;
  for (int t = 0; t < cfg.d && size <= kDefaultSizeLimit; ++t)
    size *= static_cast<std::size_t>(dims.rank());
  if (size > kDefaultSizeLimit && !cfg.allow_large)
    throw UsageError("tensor space of " + dims.to_string() + " exceeds " + std::to_string(kDefaultSizeLimit) +
                     "; pass --allow-large to run anyway");
  return dims;
}

// ------------------------------------------------------------------ dim

int cmd_dim(const RunConfig &cfg, std::ostream &out) {
  const Dims dims = make_dims(cfg);
  const std::uint64_t count = dimension_count(dims);
  const std::size_t ysize = enumerate_basis_Y(dims).size();
  std::optional<std::size_t> commutant;
  if (dims.tensor_dim() <= kCommutantLimit)
    commutant = commutant_dimension(dims);
  const bool agree = ysize == count && (!commutant || *commutant == count);

  if (cfg.format == Format::Json) {
    Json j{{"m", cfg.m}, {"n", cfg.n}, {"d", cfg.d}, {"dimension_count", count}, {"basis_size", ysize}};
    j["commutant_dimension"] = commutant ? Json(*commutant) : Json(nullptr);
    j["agree"] = agree;
    out << j.dump() << '\n';
  } else {
    out << count << ',' << ysize;
    if (commutant)
      out << ',' << *commutant;
    out << '\n';
  }
  return agree ? 0 : 1;
}

// --------------------------------------------------------------- verify

using SuiteFn = std::function<VerificationReport()>;

std::vector<std::pair<std::string, SuiteFn>> suites_for(const RunConfig &cfg, const Dims &dims) {
  const bool quantum = cfg.mode == Mode::Quantum;
  const int max_power = cfg.max_power;
  const RankOptions rank_opts{cfg.q0, false};
  std::vector<std::pair<std::string, SuiteFn>> all;
  if (quantum) {
    all.emplace_back("relations", [dims] { return verify_relations_quantum(dims); });
    all.emplace_back("commutation", [dims, max_power] { return verify_commutation_quantum(dims, max_power); });
    all.emplace_back("basis", [dims, rank_opts] { return basis_rank_certify_q(dims, rank_opts); });
    all.emplace_back("idempotents", [dims] { return verify_idempotents_quantum(dims); });
    if (dims.d() >= 1 || cfg.suite == "omega")
      all.emplace_back("omega", [dims] { return verify_omega(dims); });
  } else {
    all.emplace_back("relations", [dims] { return verify_relations_classical(dims); });
    all.emplace_back("commutation", [dims, max_power] { return verify_commutation_classical(dims, max_power); });
    all.emplace_back("basis", [dims] {
      VerificationReport r = basis_rank_certify(dims);
      r.merge(verify_pbw_bijection(dims));
      return r;
    });
    all.emplace_back("idempotents", [dims] { return verify_idempotents_classical(dims); });
    if (dims.d() >= 2 || cfg.suite == "schur-weyl")
      all.emplace_back("schur-weyl", [dims] { return verify_schur_weyl(dims); });
  }
  if (cfg.suite == "all")
    return all;
  for (auto &s : all)
    if (s.first == cfg.suite)
      return {s};
  throw UsageError("suite '" + cfg.suite + "' is not available in " + (quantum ? "quantum" : "classical") + " mode");
}

int cmd_verify(const RunConfig &cfg, std::ostream &out) {
  const Dims dims = make_dims(cfg);
  if (cfg.max_power < 1)
    throw UsageError("--max-power must be at least 1");
  if (cfg.format == Format::Csv)
    throw UsageError("verify supports --format text or json");
  const auto suites = suites_for(cfg, dims);

  VerificationReport report;
  report.set_sink([&](const CheckResult &c) {
    if (cfg.format == Format::Json)
      out << to_json(c).dump() << '\n';
    else
      out << format_check(c) << '\n';
    out.flush();
  });
  for (const auto &[name, fn] : suites)
    report.merge(fn());
  if (cfg.format == Format::Text)
    out << (report.all_passed() ? "ALL PASS" : "FAILED") << ' ' << dims.to_string() << ' '
        << report.checks().size() << " checks, " << report.failures() << " failed\n";
  return report.all_passed() ? 0 : 1;
}

// ---------------------------------------------------------------- basis

int cmd_basis(const RunConfig &cfg, std::ostream &out) {
  const Dims dims = make_dims(cfg);
  const auto ys = enumerate_basis_Y(dims);
  if (cfg.format == Format::Csv) {
    out << "index,label\n";
    for (std::size_t k = 0; k < ys.size(); ++k)
      out << k << ",\"" << ys[k].to_string() << "\"\n";
    return 0;
  }
  // One record per line inside a single JSON array.
  out << "[";
  for (std::size_t k = 0; k < ys.size(); ++k)
    out << (k ? ",\n " : "\n ") << to_json(ys[k]).dump();
  out << (ys.empty() ? "]\n" : "\n]\n");
  return 0;
}

// --------------------------------------------------------------- matrix

int cmd_matrix(const RunConfig &cfg, std::ostream &out) {
  const Dims dims = make_dims(cfg);
  if (cfg.gen.empty())
    throw UsageError("matrix needs --gen");
  GeneratorTag g;
  try {
    g = GeneratorTag::parse(cfg.gen);
    g.validate(dims);
  } catch (const std::exception &e) {
    throw UsageError(std::string("--gen: ") + e.what());
  }
  if (g.quantum() != (cfg.mode == Mode::Quantum))
    throw UsageError("generator " + g.to_string() + " does not belong to " +
                     (cfg.mode == Mode::Quantum ? "quantum" : "classical") + " mode");
  auto emit = [&](const auto &mat) {
    if (cfg.format == Format::Json)
      out << matrix_json(mat).dump() << '\n';
    else
      out << matrix_csv(mat);
  };
  if (cfg.mode == Mode::Quantum)
    emit(rho_q_generator(dims, g));
  else
    emit(rho_generator(dims, g));
  return 0;
}

// --------------------------------------------------------------- coords

std::string short_label(const BasisElement &y) {
  if (y.A.entries().empty() && y.C.entries().empty())
    return "1_{" + y.lambda.to_string() + "}";
  return y.to_string();
}

int cmd_coords(const RunConfig &cfg, std::ostream &out, std::ostream &err) {
  const Dims dims = make_dims(cfg);
  if (cfg.mode != Mode::Classical)
    throw UsageError("coords is available in classical mode only");
  if (cfg.input.empty())
    throw UsageError("coords needs --input");
  KostantMonomial mono;
  try {
    mono = monomial_from_json(dims, Json::parse(cfg.input));
  } catch (const Json::parse_error &e) {
    throw UsageError(std::string("--input: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw UsageError(std::string("--input: ") + e.what());
  }

  const VerificationReport cert = basis_rank_certify(dims);
  if (!cert.all_passed()) {
    out << cert.to_text();
    err << "basis certification failed; coordinates are not defined\n";
    return 1;
  }
  const auto coords = coordinates_in_Y(dims, mono);
  if (cfg.format == Format::Json) {
    Json list = Json::array();
    for (const auto &[y, c] : coords)
      list.push_back(Json{{"element", to_json(y)}, {"coefficient", to_string(c)}});
    out << Json{{"monomial", mono.to_string()}, {"coordinates", list}}.dump() << '\n';
  } else {
    out << "{";
    bool first = true;
    for (const auto &[y, c] : coords) {
      out << (first ? "" : ", ") << short_label(y) << ": " << to_string(c);
      first = false;
    }
    out << "}\n";
  }
  return 0;
}

// ------------------------------------------------------------ catalogue

int cmd_catalogue(const RunConfig &cfg, std::ostream &out) {
  const Dims dims = make_dims(cfg);
  if (cfg.max_power < 1)
    throw UsageError("--max-power must be at least 1");
  const auto cat = identity_catalogue(dims, cfg.max_power);
  for (const auto &inst : cat) {
    if (cfg.format == Format::Json)
      out << to_json(dims, inst, false).dump() << '\n';
    else
      out << inst.label() << ": " << inst.lhs.to_string() << " = " << inst.rhs.to_string() << '\n';
  }
  return 0;
}

// ---------------------------------------------------------------- omega

int cmd_omega(const RunConfig &cfg, std::ostream &out) {
  const Dims dims = make_dims(cfg);
  if (dims.d() < 1)
    throw UsageError("omega needs d >= 1");
  if (cfg.format == Format::Json) {
    const OmegaParts parts = omega_construct(dims);
    const VerificationReport report = verify_omega(dims);
    Json diag = Json::array();
    for (std::size_t r = 0; r < parts.sigma.rows(); ++r)
      diag.push_back(parts.sigma.at(r, r).to_string());
    out << Json{{"Omega", matrix_json(parts.Omega)}, {"sigma_diagonal", diag}, {"checks", to_json(report)}}.dump()
        << '\n';
    return report.all_passed() ? 0 : 1;
  }
  RunConfig v = cfg;
  v.mode = Mode::Quantum;
  v.suite = "omega";
  return cmd_verify(v, out);
}

void add_shape_options(CLI::App *sub, RunConfig &cfg) {
  sub->add_option("--m", cfg.m, "even dimension m >= 1")->required();
  sub->add_option("--n", cfg.n, "odd dimension n >= 1")->required();
  sub->add_option("--d", cfg.d, "tensor degree d >= 0")->required();
  sub->add_flag("--allow-large", cfg.allow_large, "lift the (m+n)^d <= 4096 guard");
}

} // namespace

int run_cli(int argc, const char *const *argv, std::ostream &out, std::ostream &err) {
  CLI::App app{"Exact matrix realizations of Schur superalgebras and q-Schur superalgebras"};
  app.require_subcommand(1);
  RunConfig cfg;
  std::string mode = "classical";
  std::string format = "text";
  std::string q0 = "2";

  const std::map<std::string, Mode> modes{{"classical", Mode::Classical}, {"quantum", Mode::Quantum}};
  const std::map<std::string, Format> formats{{"text", Format::Text}, {"json", Format::Json}, {"csv", Format::Csv}};
  auto add_mode = [&](CLI::App *sub) {
    sub->add_option("--mode", mode, "classical or quantum")->check(CLI::IsMember({"classical", "quantum"}));
  };
  auto add_format = [&](CLI::App *sub) {
    sub->add_option("--format", format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
  };

  auto *dim = app.add_subcommand("dim", "dimension count, |Y| and commutant dimension");
  add_shape_options(dim, cfg);
  add_format(dim);

  auto *verify = app.add_subcommand("verify", "run verification suites");
  add_shape_options(verify, cfg);
  add_mode(verify);
  add_format(verify);
  verify->add_option("--suite", cfg.suite, "relations|commutation|basis|idempotents|schur-weyl|omega|all")
      ->check(CLI::IsMember({"relations", "commutation", "basis", "idempotents", "schur-weyl", "omega", "all"}));
  verify->add_option("--max-power", cfg.max_power, "largest divided power in commutation checks");
  verify->add_option("--q0", q0, "nonzero rational point, not +-1, for the quantum rank shortcut");

  auto *basis = app.add_subcommand("basis", "list the basis Y");
  add_shape_options(basis, cfg);
  add_mode(basis);
  add_format(basis);

  auto *matrix = app.add_subcommand("matrix", "export the matrix of a generator");
  add_shape_options(matrix, cfg);
  add_mode(matrix);
  add_format(matrix);
  matrix->add_option("--gen", cfg.gen, "e1, f2, H3 (classical) or E1, F1, K2, Kinv2 (quantum)")->required();

  auto *coords = app.add_subcommand("coords", "coordinates of a monomial in the basis Y");
  add_shape_options(coords, cfg);
  add_mode(coords);
  add_format(coords);
  coords->add_option("--input", cfg.input, R"(JSON factor list, e.g. [["f",1],["e",1]])")->required();

  auto *catalogue = app.add_subcommand("catalogue", "list the quantum commutation identities");
  add_shape_options(catalogue, cfg);
  add_format(catalogue);
  catalogue->add_option("--max-power", cfg.max_power, "largest divided power");

  auto *omega = app.add_subcommand("omega", "build Omega and compare with sigma_d");
  add_shape_options(omega, cfg);
  add_format(omega);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    cfg.command = app.get_subcommands().front()->get_name();
    cfg.mode = modes.at(mode);
    cfg.format = formats.at(format);
    cfg.q0 = parse_rational(q0);
    if (cfg.q0 == 0 || cfg.q0 == 1 || cfg.q0 == -1)
      throw UsageError("--q0 must avoid 0, 1 and -1");
    if (cfg.command == "dim")
      return cmd_dim(cfg, out);
    if (cfg.command == "verify")
      return cmd_verify(cfg, out);
    if (cfg.command == "basis")
      return cmd_basis(cfg, out);
    if (cfg.command == "matrix")
      return cmd_matrix(cfg, out);
    if (cfg.command == "coords")
      return cmd_coords(cfg, out, err);
    if (cfg.command == "catalogue")
      return cmd_catalogue(cfg, out);
    return cmd_omega(cfg, out);
  } catch (const UsageError &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::logic_error &e) {
    out << "FAIL " << e.what() << '\n';
    err << "mathematical failure: " << e.what() << '\n';
    return 1;
  }
}

} // namespace superschur
