#include "flagcoh/cli/commands.hpp"

#include <chrono>
#include <charconv>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "flagcoh/cli/sweep.hpp"
#include "flagcoh/complex.hpp"
#include "flagcoh/determinantal.hpp"
#include "flagcoh/incidence.hpp"

namespace flagcoh::cli {

namespace {

struct Invocation {
  std::string command;

  std::string json_path;
  std::string csv_path;
  unsigned parallel = Parallelism::default_workers();
  bool timing = false;
  std::string config;

  std::string weights;
  std::string primes;
  std::string compare_with;
  std::int64_t prime = 0;
  std::int64_t w0 = 0;
  int d = 0, split = 0, r = 0, n = 0, e = 0, a = 0, b = 0, m = 0, i = 0, q = 0;
  bool has_i = false, has_q = false;
  bool classical = false, compare = false, show_matrices = false, smith = false,
       no_symmetry = false;

  Json parameters = Json::object();
};

class Parser {
public:
  Parser() : app_("Exact computations with path-graph complexes, incidence cohomology and "
                  "determinantal filtrations over prime fields",
                  "flagcoh") {
    app_.require_subcommand(1);
    app_.fallthrough();
    app_.add_option("--json", inv_.json_path, "Write the verdict report as JSON to this path");
    app_.add_option("--csv", inv_.csv_path, "Write dimension tables as CSV to this path");
    app_.add_option("--parallel", inv_.parallel, "Maximum number of worker threads")
        ->check(CLI::PositiveNumber);
    app_.add_flag("--timing", inv_.timing, "Record wall-clock time in every verdict");

    auto* complex = group("complex", "Complexes C(w_0, ..., w_d)");
    auto* homology = leaf(complex, "homology", "Homology over F_p");
    homology->add_option("--weights", inv_.weights, "w0,...,wd (w0 may be negative)")->required();
    homology->add_option("--prime", inv_.prime, "Characteristic")->required();
    homology->add_flag("--show-matrices", inv_.show_matrices, "Print the integer differentials");
    homology->add_flag("--smith", inv_.smith, "Smith invariants of the integer differentials");

    auto* theorem = leaf(complex, "theorem", "Homology of C(1,...,1) against the closed formula");
    theorem->add_option("--d", inv_.d, "Number of edges")->required();
    theorem->add_option("--primes", inv_.primes, "Comma-separated primes")->required();

    auto* involution = leaf(complex, "involution", "C(w0,1^d) against C(-w0-2d,1^d)");
    involution->add_option("--w0", inv_.w0, "First weight")->required();
    involution->add_option("--d", inv_.d, "Number of edges")->required();
    involution->add_option("--primes", inv_.primes, "Comma-separated primes")->required();

    auto* ses = leaf(complex, "ses-check", "Short exact sequence splitting at edge i+1");
    ses->add_option("--weights", inv_.weights, "w0,...,wd")->required();
    ses->add_option("--split", inv_.split, "Split index i, 0 <= i < d")->required();
    ses->add_option("--prime", inv_.prime, "Characteristic")->required();

    auto* stable = group("stable", "Stable cohomology of hooks");
    auto* hook = leaf(stable, "hook", "Stable cohomology for the hook weights (w0, 1^d)");
    hook->add_option("--w0", inv_.w0, "First weight")->required();
    hook->add_option("--d", inv_.d, "Number of ones")->required();
    hook->add_option("--prime", inv_.prime, "Characteristic")->required();

    auto* periodicity = leaf(stable, "periodicity", "Compare (w0, 1^d) with (w0 + p^r, 1^d)");
    periodicity->add_option("--w0", inv_.w0, "First weight")->required();
    periodicity->add_option("--d", inv_.d, "Number of ones")->required();
    periodicity->add_option("--prime", inv_.prime, "Characteristic")->required();
    periodicity->add_option("--r", inv_.r, "Exponent r")->required();

    auto* incidence = group("incidence", "Cohomology of divided powers on projective space");
    auto* chars = leaf(incidence, "chars", "Characters of H^0 and H^1 of D^d R(e)");
    chars->add_option("--n", inv_.n, "Number of variables")->required();
    chars->add_option("--d", inv_.d, "Divided power degree")->required();
    chars->add_option("--e", inv_.e, "Twist")->required();
    chars->add_option("--prime", inv_.prime, "Characteristic")->required();
    chars->add_option("--compare", inv_.compare_with, "Formula for H^1")
        ->check(CLI::IsMember({"h1-theorem", "small-weights", "char2"}));
    chars->add_flag("--no-symmetry", inv_.no_symmetry, "Compute every multidegree block");

    auto* det = group("det", "Determinantal ideals of 2 x n matrices");
    auto* filtration = leaf(det, "filtration", "Characters of I^i / I^{i+1} in bidegree (a,b)");
    filtration->add_option("--n", inv_.n, "Number of columns")->required();
    filtration->add_option("--a", inv_.a, "x-degree")->required();
    filtration->add_option("--b", inv_.b, "y-degree")->required();
    i_option_ = filtration->add_option("--i", inv_.i, "Power of the ideal (all when omitted)");
    filtration->add_option("--prime", inv_.prime, "Characteristic")->required();
    filtration->add_flag("--classical", inv_.classical, "Use the polynomial ring, not the truncation");
    filtration->add_flag("--compare", inv_.compare, "Compare with the Schur polynomial prediction");

    auto* lead = leaf(det, "lead-terms", "Leading monomials of (I^b)_(a,b) against tableaux");
    lead->add_option("--n", inv_.n, "Number of columns")->required();
    lead->add_option("--a", inv_.a, "x-degree")->required();
    lead->add_option("--b", inv_.b, "y-degree")->required();
    lead->add_option("--prime", inv_.prime, "Characteristic")->required();
    lead->add_flag("--classical", inv_.classical, "Use the polynomial ring, not the truncation");

    auto* character = group("char", "Symmetric polynomials");
    auto* nim = leaf(character, "nim", "Nim polynomial N_m");
    nim->add_option("--m", inv_.m, "Index m")->required();
    nim->add_option("--n", inv_.n, "Number of variables")->required();
    auto* schur = leaf(character, "schur", "Schur polynomial s_(a,b) or its truncation");
    schur->add_option("--a", inv_.a, "First row")->required();
    schur->add_option("--b", inv_.b, "Second row")->required();
    q_option_ = schur->add_option("--q", inv_.q, "Truncation bound")->check(CLI::PositiveNumber);
    schur->add_option("--n", inv_.n, "Number of variables")->required();

    auto* sweep = leaf(&app_, "sweep", "Run a command over a parameter grid");
    sweep->add_option("--config", inv_.config, "Sweep configuration file")
        ->required()
        ->check(CLI::ExistingFile);
  }

  Invocation parse(const std::vector<std::string>& args) {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app_.parse(reversed);
    inv_.has_i = i_option_->count() > 0;
    inv_.has_q = q_option_->count() > 0;
    const CLI::App* node = &app_;
    std::string command;
    for (;;) {
      auto chosen = node->get_subcommands();
      if (chosen.empty())
        break;
      node = chosen.front();
      command += (command.empty() ? "" : " ") + node->get_name();
    }
    inv_.command = command;
    for (const CLI::Option* opt : node->get_options()) {
      if (opt->count() == 0 || opt->get_name() == "--help")
        continue;
      std::string key = opt->get_name();
      key.erase(0, key.find_first_not_of('-'));
      if (opt->get_type_size() == 0) {
        inv_.parameters[key] = true;
        continue;
      }
      const std::string value = opt->results().front();
      long long number = 0;
      auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), number);
      if (ec == std::errc() && ptr == value.data() + value.size())
        inv_.parameters[key] = number;
      else
        inv_.parameters[key] = value;
    }
    return inv_;
  }

  int exit(const CLI::ParseError& e, std::ostream& out, std::ostream& err) {
    return app_.exit(e, out, err);
  }

private:
  CLI::App* group(const std::string& name, const std::string& description) {
    auto* sub = app_.add_subcommand(name, description);
    sub->require_subcommand(1);
    sub->fallthrough();
    return sub;
  }
  static CLI::App* leaf(CLI::App* parent, const std::string& name, const std::string& description) {
    auto* sub = parent->add_subcommand(name, description);
    sub->fallthrough();
    return sub;
  }

  CLI::App app_;
  Invocation inv_;
  CLI::Option* i_option_ = nullptr;
  CLI::Option* q_option_ = nullptr;
};

struct Context {
  Parallelism parallel;
  bool timing = false;
  Report report;
};

Prime to_prime(std::int64_t value) {
  if (value < 2)
    throw std::invalid_argument(std::to_string(value) + " is not a prime");
  return Prime(static_cast<std::uint64_t>(value));
}

std::vector<std::int64_t> parse_list(const std::string& text, const char* what) {
  std::vector<std::int64_t> values;
  std::stringstream in(text);
  for (std::string item; std::getline(in, item, ',');) {
    std::int64_t x = 0;
    auto [ptr, ec] = std::from_chars(item.data(), item.data() + item.size(), x);
    if (ec != std::errc() || ptr != item.data() + item.size())
      throw std::invalid_argument(std::string("malformed ") + what + ": '" + text + "'");
    values.push_back(x);
  }
  if (values.empty())
    throw std::invalid_argument(std::string("empty ") + what);
  return values;
}

std::vector<Prime> parse_primes(const std::string& text) {
  std::vector<Prime> primes;
  for (std::int64_t p : parse_list(text, "prime list"))
    primes.push_back(to_prime(p));
  return primes;
}

Verdict make_verdict(std::string subject, Json parameters) {
  Verdict v;
  v.subject = std::move(subject);
  v.parameters = std::move(parameters);
  return v;
}

template <class Compute>
Verdict timed(const Context& ctx, Compute&& compute) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v = compute();
  if (ctx.timing)
    v.timing = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return v;
}

std::string describe(const TermDifference& diff) {
  return "coefficient of " + LaurentPolynomial::monomial(diff.exponent).to_string() + " is " +
         diff.left.get_str() + " computed vs " + diff.right.get_str() + " predicted";
}

std::optional<std::string> poincare_difference(const PoincarePolynomial& a,
                                               const PoincarePolynomial& b) {
  const std::size_t n = std::max(a.coefficients.size(), b.coefficients.size());
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] != b[k])
      return "h_" + std::to_string(k) + " is " + std::to_string(a[k]) + " computed vs " +
             std::to_string(b[k]) + " predicted";
  return std::nullopt;
}

void add_poincare_rows(Context& ctx, const std::string& subject, const std::string& table,
                       const Json& parameters, const PoincarePolynomial& h) {
  for (std::size_t k = 0; k < h.coefficients.size(); ++k)
    ctx.report.rows.push_back(
        {subject, table, parameters, std::to_string(k), std::to_string(h.coefficients[k])});
}

void add_character_rows(Context& ctx, const std::string& subject, const std::string& table,
                        const Json& parameters, const LaurentPolynomial& f) {
  for (const auto& [e, c] : f.terms())
    ctx.report.rows.push_back({subject, table, parameters, exponent_string(e), c.get_str()});
}

std::string join(const std::vector<std::size_t>& v) {
  std::string s = "[";
  for (std::size_t k = 0; k < v.size(); ++k)
    s += (k ? "," : "") + std::to_string(v[k]);
  return s + "]";
}

std::int64_t euler(const std::vector<std::size_t>& v) {
  std::int64_t chi = 0;
  for (std::size_t k = 0; k < v.size(); ++k)
    chi += (k % 2 == 0 ? 1 : -1) * static_cast<std::int64_t>(v[k]);
  return chi;
}

// complex homology

void complex_homology(const Invocation& inv, Context& ctx) {
  const WeightSequence w(parse_list(inv.weights, "weights"), true);
  const Prime p = to_prime(inv.prime);
  const Json params = {{"weights", inv.weights}, {"prime", p.value()}};
  ctx.report.verdicts.push_back(timed(ctx, [&] {
    Verdict v = make_verdict("complex.homology", params);
    const RankTable table = rank_table(build_complex(w, p), ctx.parallel);
    const PoincarePolynomial h = table.homology();
    v.payload["poincare"] = to_json(h);
    v.payload["poincare_text"] = h.to_string();
    v.payload["ranks"] = to_json(table);
    ctx.report.lines.push_back("C" + w.to_string() + " over F_" + std::to_string(p.value()));
    ctx.report.lines.push_back("  dims     " + join(table.dims));
    ctx.report.lines.push_back("  ranks    " + join(table.ranks));
    ctx.report.lines.push_back("  homology " + h.to_string());
    add_poincare_rows(ctx, v.subject, "homology", params, h);

    if (euler(h.coefficients) != euler(table.dims)) {
      v.status = Status::disagree;
      v.witness = "Euler characteristic of homology differs from that of the chain groups";
    }
    if (w[0] >= 0 && static_cast<std::int64_t>(p.value()) > w.total() && !h.is_zero() &&
        !v.witness) {
      v.status = Status::disagree;
      v.witness = "p exceeds the total weight but the complex is not exact";
    }

    if (inv.show_matrices || inv.smith) {
      const IntegerComplex c = build_complex(w, Integers{});
      Json matrices = Json::array(), smith = Json::array();
      for (int k = 1; k <= c.length(); ++k) {
        const IntegerMatrix m = c.boundary(k).to_dense();
        if (inv.show_matrices) {
          Json rows = Json::array();
          ctx.report.lines.push_back("  boundary C_" + std::to_string(k) + " -> C_" +
                                     std::to_string(k - 1) + ":");
          for (std::size_t r = 0; r < m.rows(); ++r) {
            Json row = Json::array();
            std::string text = "    [";
            for (std::size_t col = 0; col < m.cols(); ++col) {
              row.push_back(m.at(r, col).get_si());
              text += (col ? " " : "") + m.at(r, col).get_str();
            }
            rows.push_back(std::move(row));
            ctx.report.lines.push_back(text + "]");
          }
          matrices.push_back(std::move(rows));
        }
        if (inv.smith) {
          try {
            Json invariants = Json::array();
            std::string text;
            for (const auto& x : smith_invariants(m)) {
              invariants.push_back(x.get_str());
              text += (text.empty() ? "" : ",") + x.get_str();
            }
            smith.push_back(std::move(invariants));
            ctx.report.lines.push_back("  Smith invariants of boundary out of C_" +
                                       std::to_string(k) + ": [" + text + "]");
          } catch (const std::length_error& error) {
            v.status = Status::error;
            v.witness = error.what();
            break;
          }
        }
      }
      if (inv.show_matrices)
        v.payload["matrices"] = std::move(matrices);
      if (inv.smith)
        v.payload["smith"] = std::move(smith);
    }
    return v;
  }));
}

// complex theorem

void complex_theorem(const Invocation& inv, Context& ctx) {
  if (inv.d < 0 || inv.d + 1 > kMaxEdges)
    throw std::invalid_argument("d out of range");
  for (Prime p : parse_primes(inv.primes)) {
    const Json params = {{"d", inv.d}, {"prime", p.value()}};
    ctx.report.verdicts.push_back(timed(ctx, [&] {
      Verdict v = make_verdict("complex.theorem", params);
      const PoincarePolynomial computed =
          homology_dims(build_complex(WeightSequence(std::vector<std::int64_t>(inv.d + 1, 1)), p),
                        ctx.parallel);
      const PoincarePolynomial formula = poincare_formula_all_ones(inv.d, p);
      v.payload["computed"] = to_json(computed);
      v.payload["formula"] = to_json(formula);
      v.witness = poincare_difference(computed, formula);
      v.status = v.witness ? Status::disagree : Status::agree;
      ctx.report.lines.push_back("d=" + std::to_string(inv.d) + " p=" + std::to_string(p.value()) +
                                 ": computed " + computed.to_string() + ", formula " +
                                 formula.to_string());
      add_poincare_rows(ctx, v.subject, "homology", params, computed);
      return v;
    }));
  }
}

// complex involution

void complex_involution(const Invocation& inv, Context& ctx) {
  if (inv.d < 0 || inv.d > kMaxEdges)
    throw std::invalid_argument("d out of range");
  for (Prime p : parse_primes(inv.primes)) {
    const Json params = {{"w0", inv.w0}, {"d", inv.d}, {"prime", p.value()}};
    ctx.report.verdicts.push_back(timed(ctx, [&] {
      Verdict v = make_verdict("complex.involution", params);
      const InvolutionReport r = check_involution(inv.w0, inv.d, p);
      v.payload = {{"partner", r.partner},
                   {"reduced_partner", r.reduced_partner},
                   {"original", to_json(r.original)},
                   {"partner_table", to_json(r.partner_table)},
                   {"reduced_table", to_json(r.reduced_table)},
                   {"field_agrees", r.field_agrees},
                   {"smith_checked", r.smith_checked},
                   {"smith_agrees", r.smith_agrees}};
      v.status = r.status;
      v.witness = r.witness;
      ctx.report.lines.push_back("p=" + std::to_string(p.value()) + ": C" +
                                 WeightSequence::hook(inv.w0, inv.d).to_string() + " vs partner " +
                                 std::to_string(r.partner) + " and " +
                                 std::to_string(r.reduced_partner) + "; ranks " +
                                 join(r.original.ranks) + " / " + join(r.partner_table.ranks) +
                                 " / " + join(r.reduced_table.ranks));
      return v;
    }));
  }
}

// complex ses-check

void complex_ses(const Invocation& inv, Context& ctx) {
  const WeightSequence w(parse_list(inv.weights, "weights"), true);
  const Prime p = to_prime(inv.prime);
  const Json params = {{"weights", inv.weights}, {"split", inv.split}, {"prime", p.value()}};
  ctx.report.verdicts.push_back(timed(ctx, [&] {
    Verdict v = make_verdict("complex.ses", params);
    const SesReport r = ses_dimension_check(w, inv.split, p);
    v.payload = {{"whole", to_json(r.whole)},     {"sub", to_json(r.sub)},
                 {"merged", to_json(r.merged)},   {"dimensions_ok", r.dimensions_ok},
                 {"euler_ok", r.euler_ok},         {"subadditive_ok", r.subadditive_ok}};
    v.status = r.status;
    v.witness = r.witness;
    ctx.report.lines.push_back("whole  " + r.whole.to_string());
    ctx.report.lines.push_back("sub    " + r.sub.to_string());
    ctx.report.lines.push_back("merged " + r.merged.to_string());
    return v;
  }));
}

// stable hook / periodicity

void stable_hook(const Invocation& inv, Context& ctx) {
  const Prime p = to_prime(inv.prime);
  const Json params = {{"w0", inv.w0}, {"d", inv.d}, {"prime", p.value()}};
  ctx.report.verdicts.push_back(timed(ctx, [&] {
    Verdict v = make_verdict("stable.hook", params);
    Json table = Json::array();
    for (const auto& [j, dim] : stable_hook_cohomology(inv.w0, inv.d, p)) {
      table.push_back({j, dim});
      ctx.report.rows.push_back({v.subject, "cohomology", params, std::to_string(j),
                                 std::to_string(dim)});
      if (dim != 0)
        ctx.report.lines.push_back("H^" + std::to_string(j) + "_st = " + std::to_string(dim));
    }
    v.payload["cohomology"] = std::move(table);
    return v;
  }));
}

void stable_periodicity(const Invocation& inv, Context& ctx) {
  const Prime p = to_prime(inv.prime);
  const Json params = {{"w0", inv.w0}, {"d", inv.d}, {"prime", p.value()}, {"r", inv.r}};
  if (inv.d < 0 || inv.r < 0)
    throw std::invalid_argument("d and r must be non-negative");
  ctx.report.verdicts.push_back(timed(ctx, [&] {
    Verdict v = make_verdict("stable.periodicity", params);
    std::int64_t q = 1;
    for (int k = 0; k < inv.r; ++k)
      q *= static_cast<std::int64_t>(p.value());
    const PoincarePolynomial base = homology_dims(build_complex(WeightSequence::hook(inv.w0, inv.d), p));
    const PoincarePolynomial shifted =
        homology_dims(build_complex(WeightSequence::hook(inv.w0 + q, inv.d), p));
    v.payload = {{"q", q}, {"base", to_json(base)}, {"shifted", to_json(shifted)}};
    v.witness = poincare_difference(shifted, base);
    if (q <= inv.d)
      v.status = Status::outside_hypothesis;
    else
      v.status = v.witness ? Status::disagree : Status::agree;
    ctx.report.lines.push_back("q=" + std::to_string(q) + ": " + base.to_string() + " vs " +
                               shifted.to_string());
    return v;
  }));
}

// incidence chars

Verdict compare_h1(const Invocation& inv, Prime p, const IncidenceResult& result, Context& ctx) {
  Json params = {{"n", inv.n}, {"d", inv.d}, {"e", inv.e}, {"prime", p.value()}};
  Verdict v = make_verdict("incidence." + inv.compare_with, params);
  std::optional<LaurentPolynomial> predicted;
  try {
    if (inv.compare_with == "h1-theorem")
      predicted = h1_theorem_char(inv.n, inv.d, inv.e, p);
    else if (inv.compare_with == "small-weights")
      predicted = small_weights_conjecture_char(inv.n, inv.d, inv.e, p);
    else if (p.value() != 2)
      throw std::domain_error("the Nim formula is stated in characteristic 2");
    else
      predicted = char2_conjecture_char(inv.n, inv.d, inv.e);
  } catch (const std::domain_error& error) {
    v.status = Status::outside_hypothesis;
    v.payload["reason"] = error.what();
    return v;
  }
  v.payload["predicted"] = to_json(*predicted);
  v.payload["predicted_text"] = predicted->to_string();
  v.payload["dim_predicted"] = dim_eval(*predicted).get_str();
  if (auto diff = first_difference(result.h1, *predicted)) {
    v.status = Status::disagree;
    v.witness = describe(*diff);
  }
  ctx.report.lines.push_back("predicted h1 = " + predicted->to_string());
  return v;
}

void incidence_chars(const Invocation& inv, Context& ctx) {
  const Prime p = to_prime(inv.prime);
  const Json params = {{"n", inv.n}, {"d", inv.d}, {"e", inv.e}, {"prime", p.value()}};
  IncidenceOptions options;
  options.symmetry_reduction = !inv.no_symmetry;
  options.parallel = ctx.parallel;
  IncidenceResult result;
  ctx.report.verdicts.push_back(timed(ctx, [&] {
    Verdict v = make_verdict("incidence.chars", params);
    result = compute_incidence(inv.n, inv.d, inv.e, p, options);
    v.payload = {{"h0", to_json(result.h0)},
                 {"h1", to_json(result.h1)},
                 {"h0_text", result.h0.to_string()},
                 {"h1_text", result.h1.to_string()},
                 {"dim_h0", dim_eval(result.h0).get_str()},
                 {"dim_h1", dim_eval(result.h1).get_str()},
                 {"euler_ok", result.euler_ok},
                 {"blocks", result.blocks.size()}};
    if (!result.euler_ok) {
      v.status = Status::disagree;
      v.witness = "blockwise Euler identity fails";
    } else if (!is_symmetric(result.h0) || !is_symmetric(result.h1)) {
      v.status = Status::disagree;
      v.witness = "a cohomology character is not symmetric";
    }
    ctx.report.lines.push_back("h0 = " + result.h0.to_string());
    ctx.report.lines.push_back("h1 = " + result.h1.to_string());
    add_character_rows(ctx, v.subject, "h0", params, result.h0);
    add_character_rows(ctx, v.subject, "h1", params, result.h1);
    return v;
  }));
  if (!inv.compare_with.empty())
    ctx.report.verdicts.push_back(timed(ctx, [&] { return compare_h1(inv, p, result, ctx); }));
}

// det filtration / lead-terms

void det_filtration(const Invocation& inv, Context& ctx) {
  const Prime p = to_prime(inv.prime);
  const bool truncated = !inv.classical;
  SliceOptions options;
  options.parallel = ctx.parallel;
  Json params = {{"n", inv.n},
                 {"a", inv.a},
                 {"b", inv.b},
                 {"prime", p.value()},
                 {"ring", truncated ? "truncated" : "classical"}};
  if (inv.has_i)
    params["i"] = inv.i;
  ctx.report.verdicts.push_back(timed(ctx, [&] {
    Verdict v = make_verdict("det.filtration", params);
    const bool hypothesis = !truncated || inv.a - inv.b >= static_cast<int>(p.value()) - 1;
    std::vector<FiltrationLevel> levels;
    if (inv.has_i) {
      if (inv.i < 0)
        throw std::invalid_argument("i must be non-negative");
      FiltrationLevel level;
      level.i = inv.i;
      level.computed = filtration_character(inv.n, inv.a, inv.b, inv.i, truncated, p, options);
      level.predicted = filtration_prediction(inv.n, inv.a, inv.b, inv.i, truncated, p);
      level.difference = first_difference(level.computed, level.predicted);
      levels.push_back(std::move(level));
    } else {
      levels = check_filtration(inv.n, inv.a, inv.b, p, truncated, options).levels;
    }
    Json payload_levels = Json::array();
    bool agrees = true;
    for (const auto& level : levels) {
      Json entry = {{"i", level.i},
                    {"computed", to_json(level.computed)},
                    {"dimension", dim_eval(level.computed).get_str()}};
      ctx.report.lines.push_back("i=" + std::to_string(level.i) + ": " + level.computed.to_string());
      add_character_rows(ctx, v.subject, "level " + std::to_string(level.i), params,
                         level.computed);
      if (inv.compare) {
        entry["predicted"] = to_json(level.predicted);
        entry["agrees"] = !level.difference;
        if (level.difference && agrees) {
          agrees = false;
          v.witness = "level i=" + std::to_string(level.i) + ": " + describe(*level.difference);
        }
      }
      payload_levels.push_back(std::move(entry));
    }
    v.payload = {{"levels", std::move(payload_levels)}, {"hypothesis_holds", hypothesis}};
    if (inv.compare) {
      v.payload["comparison_agrees"] = agrees;
      v.status = !hypothesis ? Status::outside_hypothesis
                             : (agrees ? Status::agree : Status::disagree);
    }
    return v;
  }));
}

void det_lead_terms(const Invocation& inv, Context& ctx) {
  const Prime p = to_prime(inv.prime);
  const bool truncated = !inv.classical;
  SliceOptions options;
  options.parallel = ctx.parallel;
  const Json params = {{"n", inv.n},
                       {"a", inv.a},
                       {"b", inv.b},
                       {"prime", p.value()},
                       {"ring", truncated ? "truncated" : "classical"}};
  ctx.report.verdicts.push_back(timed(ctx, [&] {
    Verdict v = make_verdict("det.lead-terms", params);
    const LeadTermsReport r = check_lead_terms(inv.n, inv.a, inv.b, p, truncated, options);
    Json leading = Json::array(), missing = Json::array();
    for (const auto& m : r.leading)
      leading.push_back(m.to_string());
    for (const auto& t : r.missing)
      missing.push_back(tableau_monomial(t, inv.n).to_string());
    v.payload = {{"tableaux", r.tableaux.size()},
                 {"leading", std::move(leading)},
                 {"missing", std::move(missing)},
                 {"sets_equal", r.sets_equal},
                 {"hypothesis_holds", r.hypothesis_holds}};
    v.status = r.status;
    v.witness = r.witness;
    ctx.report.lines.push_back(std::to_string(r.tableaux.size()) + " tableaux, " +
                               std::to_string(r.leading.size()) + " leading monomials, " +
                               std::to_string(r.missing.size()) + " missing");
    return v;
  }));
}

// char nim / schur

void char_nim(const Invocation& inv, Context& ctx) {
  const Json params = {{"m", inv.m}, {"n", inv.n}};
  ctx.report.verdicts.push_back(timed(ctx, [&] {
    Verdict v = make_verdict("char.nim", params);
    const LaurentPolynomial f = nim_poly(inv.m, inv.n);
    v.payload = {{"character", to_json(f)},
                 {"text", f.to_string()},
                 {"dimension", dim_eval(f).get_str()}};
    if (!is_symmetric(f)) {
      v.status = Status::disagree;
      v.witness = "character is not symmetric";
    }
    ctx.report.lines.push_back("N_" + std::to_string(inv.m) + " = " + f.to_string());
    add_character_rows(ctx, v.subject, "character", params, f);
    return v;
  }));
}

void char_schur(const Invocation& inv, Context& ctx) {
  Json params = {{"a", inv.a}, {"b", inv.b}, {"n", inv.n}};
  if (inv.has_q)
    params["q"] = inv.q;
  ctx.report.verdicts.push_back(timed(ctx, [&] {
    Verdict v = make_verdict("char.schur", params);
    const LaurentPolynomial f =
        inv.has_q ? schur2_trunc(inv.a, inv.b, inv.q, inv.n) : schur2(inv.a, inv.b, inv.n);
    v.payload = {{"character", to_json(f)},
                 {"text", f.to_string()},
                 {"dimension", dim_eval(f).get_str()}};
    // Tableau generating sums exist for honest shapes and prime truncations.
    if (inv.a >= inv.b && inv.b >= 0 && (!inv.has_q || is_prime(static_cast<std::uint64_t>(inv.q)))) {
      const auto tableaux = inv.has_q ? enumerate_pssyt(inv.n, inv.a, inv.b, Prime(inv.q))
                                      : enumerate_ssyt(inv.n, inv.a, inv.b);
      LaurentPolynomial sum(inv.n);
      for (const auto& t : tableaux)
        sum.add_term(t.content(inv.n), 1);
      v.payload["tableaux"] = tableaux.size();
      if (auto diff = first_difference(sum, f)) {
        v.status = Status::disagree;
        v.witness = "tableau sum " + describe(*diff);
      }
    }
    ctx.report.lines.push_back(f.to_string());
    add_character_rows(ctx, v.subject, "character", params, f);
    return v;
  }));
}

void execute(const Invocation& inv, Context& ctx);

// sweep

void sweep(const Invocation& inv, Context& ctx) {
  std::ifstream in(inv.config);
  if (!in)
    throw std::invalid_argument("cannot open " + inv.config);
  const SweepConfig config = parse_sweep_config(in);
  const std::size_t points = config.size();
  std::vector<Report> reports(points);
  parallel_for(points, ctx.parallel, [&](std::size_t index) {
    const auto args = config.arguments(index);
    try {
      Parser parser;
      const Invocation point = parser.parse(args);
      Context inner{Parallelism::serial(), ctx.timing, {}};
      execute(point, inner);
      reports[index] = std::move(inner.report);
    } catch (const std::exception& error) {
      std::string line;
      for (const auto& a : args)
        line += (line.empty() ? "" : " ") + a;
      Verdict v = make_verdict("sweep.point", {{"arguments", line}});
      v.status = Status::error;
      v.witness = error.what();
      reports[index].verdicts.push_back(std::move(v));
    }
  });
  for (auto& r : reports)
    ctx.report.append(std::move(r));
}

void execute(const Invocation& inv, Context& ctx) {
  static const std::map<std::string, std::function<void(const Invocation&, Context&)>> handlers = {
      {"complex homology", complex_homology},
      {"complex theorem", complex_theorem},
      {"complex involution", complex_involution},
      {"complex ses-check", complex_ses},
      {"stable hook", stable_hook},
      {"stable periodicity", stable_periodicity},
      {"incidence chars", incidence_chars},
      {"det filtration", det_filtration},
      {"det lead-terms", det_lead_terms},
      {"char nim", char_nim},
      {"char schur", char_schur},
      {"sweep", sweep},
  };
  auto it = handlers.find(inv.command);
  if (it == handlers.end())
    throw std::invalid_argument("unknown command '" + inv.command + "'");
  ctx.report.command = inv.command;
  ctx.report.parameters = inv.parameters;
  it->second(inv, ctx);
}

} // namespace

Report collect(const std::vector<std::string>& args) {
  Parser parser;
  Invocation inv;
  try {
    inv = parser.parse(args);
  } catch (const CLI::ParseError& error) {
    throw std::invalid_argument(error.what());
  }
  Context ctx{Parallelism{inv.parallel}, inv.timing, {}};
  execute(inv, ctx);
  return std::move(ctx.report);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Parser parser;
  Invocation inv;
  try {
    inv = parser.parse(args);
  } catch (const CLI::ParseError& error) {
    const int code = parser.exit(error, out, err);
    return code == 0 ? 0 : 1;
  }
  Context ctx{Parallelism{inv.parallel}, inv.timing, {}};
  try {
    execute(inv, ctx);
  } catch (const std::exception& error) {
    err << "error: " << error.what() << '\n';
    return 1;
  }
  write_text(ctx.report, out);
  if (!inv.json_path.empty()) {
    std::ofstream file(inv.json_path);
    if (!file) {
      err << "error: cannot write " << inv.json_path << '\n';
      return 1;
    }
    write_json(ctx.report, file);
  }
  if (!inv.csv_path.empty()) {
    std::ofstream file(inv.csv_path);
    if (!file) {
      err << "error: cannot write " << inv.csv_path << '\n';
      return 1;
    }
    write_csv(ctx.report, file);
  }
  return exit_code(ctx.report);
}

} // namespace flagcoh::cli
