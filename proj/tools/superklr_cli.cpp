// Command-line front end: graded dimensions, idempotent checks, monomial
// bases, odd nilHecke arithmetic, and idempotent-connectivity reports.
#include <superklr/basis.hpp>
#include <superklr/cartan.hpp>
#include <superklr/dimension.hpp>
#include <superklr/fock.hpp>
#include <superklr/io.hpp>
#include <superklr/onh.hpp>
#include <superklr/structure.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <string>

namespace {

using namespace superklr;
using nlohmann::json;

void emit(const json& body) {
  json out = body;
  out["schema"] = 1;
  std::cout << out.dump() << "\n";
}

std::string join_longs(const std::vector<long>& values) {
  std::string out;
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(values[i]);
  }
  return out;
}

/// The rank-n level-ell odd nilHecke query expressed over the one-label
/// datum: a single odd label with Cartan matrix (2).
struct OnhQuery {
  CartanSuperdatum datum;
  DominantWeight lambda;
  WeightSeq nu;
};

OnhQuery onh_query(long n, long ell) {
  OnhQuery q{make_superdatum({"0"}, {{2}}, {Parity::odd}), {ell},
             WeightSeq(static_cast<std::size_t>(n), 0)};
  return q;
}

int run_validate(const std::string& path, bool as_json) {
  const RawConfig raw = read_config(path);
  const ValidationReport report =
      validate_superdatum(raw.labels, raw.cartan, raw.parity, raw.symmetrizer);
  if (as_json) {
    json body;
    body["ok"] = report.ok;
    body["symmetrizer"] = report.symmetrizer;
    json issues = json::array();
    for (const ValidationIssue& issue : report.issues)
      issues.push_back({{"code", validation_code_name(issue.code)},
                        {"message", issue.message}});
    body["issues"] = std::move(issues);
    emit(body);
  } else if (report.ok) {
    std::cout << "ok\n";
    std::cout << "symmetrizer: " << join_longs(report.symmetrizer) << "\n";
  } else {
    std::cout << "invalid\n";
    for (const ValidationIssue& issue : report.issues)
      std::cout << "- " << validation_code_name(issue.code) << ": "
                << issue.message << "\n";
  }
  return report.ok ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Exact graded dimensions, monomial bases, and indecomposability "
      "diagnostics for cyclotomic quiver Hecke superalgebras"};
  app.require_subcommand(1);
  std::string output = "text";
  app.add_option("--output", output, "Output mode")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();

  std::string config_path, lambda_text, nu_text, nu_prime_text, beta_text,
      blocks_text, mu_text, a_text, b_text;
  long opt_n = 0, opt_ell = 0, max_n = 5, max_ell = 7;
  std::size_t cap = 5000;
  bool list_labels = false;

  CLI::App* validate = app.add_subcommand("validate", "Check a config file");
  validate->add_option("config", config_path, "Config file (JSON)")->required();

  const auto add_datum_options = [&](CLI::App* sub) {
    sub->add_option("--cartan", config_path, "Config file (JSON)")->required();
    sub->add_option("--lambda", lambda_text, "Dominant weight, e.g. 2,1")->required();
  };

  CLI::App* dim = app.add_subcommand("dim", "Graded dimension of e(nu) R e(nu')");
  add_datum_options(dim);
  dim->add_option("--nu", nu_text, "Label sequence, e.g. 1,2,1")->required();
  dim->add_option("--nu-prime", nu_prime_text, "Target sequence (default: --nu)");

  CLI::App* dim_table =
      app.add_subcommand("dim-table", "All nonzero graded dimensions in a block");
  add_datum_options(dim_table);
  dim_table->add_option("--beta", beta_text, "Multiplicity vector, e.g. 1:2,2:1")
      ->required();
  dim_table->add_option("--cap", cap, "Sequence-count guard")->capture_default_str();

  CLI::App* nonzero = app.add_subcommand("nonzero", "Does e(nu) survive the quotient?");
  add_datum_options(nonzero);
  nonzero->add_option("--nu", nu_text, "Label sequence")->required();

  CLI::App* tilde =
      app.add_subcommand("tilde", "Diagonal dimension of a block-constant sequence");
  add_datum_options(tilde);
  tilde->add_option("--blocks", blocks_text, "Ordered blocks, e.g. 1:2,2:1")->required();

  CLI::App* basis = app.add_subcommand("basis", "Monomial bases");
  basis->require_subcommand(1);
  CLI::App* basis_tilde = basis->add_subcommand(
      "tilde", "Diagonal basis of a block-constant sequence");
  add_datum_options(basis_tilde);
  basis_tilde->add_option("--blocks", blocks_text, "Ordered blocks")->required();
  basis_tilde->add_flag("--list", list_labels, "Print every label");
  CLI::App* basis_onh =
      basis->add_subcommand("onh", "Monomial basis of the cyclotomic odd nilHecke algebra");
  basis_onh->add_option("--n", opt_n, "Rank")->required();
  basis_onh->add_option("--ell", opt_ell, "Level")->required();
  basis_onh->add_flag("--list", list_labels, "Print every label");
  CLI::App* basis_distinct = basis->add_subcommand(
      "distinct", "Basis of e(nu) R e(mu) for pairwise distinct labels");
  add_datum_options(basis_distinct);
  basis_distinct->add_option("--mu", mu_text, "Source sequence")->required();
  basis_distinct->add_option("--nu", nu_text, "Target sequence")->required();
  basis_distinct->add_flag("--list", list_labels, "Print every label");

  CLI::App* onh = app.add_subcommand("onh", "Odd nilHecke engine");
  onh->require_subcommand(1);
  CLI::App* onh_mult = onh->add_subcommand("mult", "Multiply in the cyclotomic quotient");
  onh_mult->add_option("--n", opt_n, "Rank")->required();
  onh_mult->add_option("--ell", opt_ell, "Level")->required();
  onh_mult->add_option("--a", a_text, "Left factor")->required();
  onh_mult->add_option("--b", b_text, "Right factor")->required();
  CLI::App* onh_table =
      onh->add_subcommand("table", "Ungraded dimension table over a rank/level range");
  onh_table->add_option("--max-n", max_n, "Largest rank")->capture_default_str();
  onh_table->add_option("--max-ell", max_ell, "Largest level")->capture_default_str();
  CLI::App* onh_dim = onh->add_subcommand("dim", "Graded super-dimension");
  onh_dim->add_option("--n", opt_n, "Rank")->required();
  onh_dim->add_option("--ell", opt_ell, "Level")->required();

  CLI::App* connectivity =
      app.add_subcommand("connectivity", "Idempotent graph and verdict for a block");
  add_datum_options(connectivity);
  connectivity->add_option("--beta", beta_text, "Multiplicity vector")->required();
  connectivity->add_option("--cap", cap, "Sequence-count guard")->capture_default_str();

  CLI::App* oracle_check = app.add_subcommand(
      "oracle-check", "Closed formula vs. raising-operator recursion");
  add_datum_options(oracle_check);
  oracle_check->add_option("--nu", nu_text, "Label sequence")->required();
  oracle_check->add_option("--nu-prime", nu_prime_text, "Target sequence (default: --nu)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  const bool as_json = output == "json";
  try {
    if (validate->parsed()) return run_validate(config_path, as_json);

    if (dim->parsed() || oracle_check->parsed()) {
      const CartanSuperdatum datum = load_config(config_path);
      const DominantWeight lambda = parse_weight(datum, lambda_text);
      const WeightSeq nu = parse_weight_seq(datum, nu_text);
      const WeightSeq nu_prime = nu_prime_text.empty()
                                     ? nu
                                     : parse_weight_seq(datum, nu_prime_text);
      const QPiPolynomial formula = graded_dim(datum, lambda, nu, nu_prime);
      if (dim->parsed()) {
        if (as_json)
          emit({{"dim", qpi_json(formula)}});
        else
          std::cout << formula.to_text() << "\n";
        return 0;
      }
      const QPiPolynomial oracle = oracle_dim(datum, lambda, nu, nu_prime);
      const bool match = formula == oracle;
      if (as_json)
        emit({{"formula", qpi_json(formula)},
              {"oracle", qpi_json(oracle)},
              {"match", match}});
      else
        std::cout << "formula: " << formula.to_text() << "\n"
                  << "oracle: " << oracle.to_text() << "\n"
                  << "match: " << (match ? "true" : "false") << "\n";
      return 0;
    }

    if (dim_table->parsed()) {
      const CartanSuperdatum datum = load_config(config_path);
      const DominantWeight lambda = parse_weight(datum, lambda_text);
      const RootVector beta = parse_root_vector(datum, beta_text);
      const std::vector<WeightSeq> seqs = weight_sequences(datum, beta, cap);
      json entries = json::array();
      for (const WeightSeq& nu : seqs)
        for (const WeightSeq& nu_prime : seqs) {
          const QPiPolynomial value = graded_dim(datum, lambda, nu, nu_prime);
          if (value.is_zero()) continue;
          if (as_json)
            entries.push_back({{"nu", seq_text(datum, nu)},
                               {"nu_prime", seq_text(datum, nu_prime)},
                               {"dim", qpi_json(value)}});
          else
            std::cout << seq_text(datum, nu) << " | " << seq_text(datum, nu_prime)
                      << " | " << value.to_text() << "\n";
        }
      if (as_json) emit({{"entries", std::move(entries)}});
      return 0;
    }

    if (nonzero->parsed()) {
      const CartanSuperdatum datum = load_config(config_path);
      const IdempotentCheck check = idempotent_nonzero(
          datum, parse_weight(datum, lambda_text), parse_weight_seq(datum, nu_text));
      if (as_json)
        emit({{"nonzero", check.nonzero}, {"dim", big_json(check.value)}});
      else if (check.nonzero)
        std::cout << "nonzero (dim " << check.value.get_str() << ")\n";
      else
        std::cout << "zero\n";
      return 0;
    }

    if (tilde->parsed()) {
      const CartanSuperdatum datum = load_config(config_path);
      const TildeBlocks blocks = parse_blocks(datum, blocks_text);
      const TildeDims dims =
          tilde_dims(datum, parse_weight(datum, lambda_text), blocks);
      if (as_json)
        emit({{"sequence", seq_text(datum, tilde_sequence(blocks))},
              {"block_n", dims.block_n},
              {"box_bound", dims.box_bound},
              {"total", big_json(dims.total)},
              {"nonzero", dims.nonzero}});
      else
        std::cout << "sequence: " << seq_text(datum, tilde_sequence(blocks)) << "\n"
                  << "block N: " << join_longs(dims.block_n) << "\n"
                  << "box bounds: " << join_longs(dims.box_bound) << "\n"
                  << "total: " << dims.total.get_str() << "\n"
                  << "nonzero: " << (dims.nonzero ? "true" : "false") << "\n";
      return 0;
    }

    if (basis->parsed()) {
      std::vector<MonomialLabel> labels;
      bool tau_first = false;
      if (basis_onh->parsed()) {
        if (opt_ell < opt_n) {
          if (as_json)
            emit({{"count", 0}, {"note", "empty (ell < n)"}});
          else
            std::cout << "empty (ell < n)\n";
          return 0;
        }
        labels = onh_basis(opt_n, opt_ell);
      } else {
        const CartanSuperdatum datum = load_config(config_path);
        const DominantWeight lambda = parse_weight(datum, lambda_text);
        if (basis_tilde->parsed()) {
          labels = tilde_basis(datum, lambda, parse_blocks(datum, blocks_text));
        } else {
          labels = distinct_root_basis(datum, lambda,
                                       parse_weight_seq(datum, mu_text),
                                       parse_weight_seq(datum, nu_text));
          tau_first = true;
        }
      }
      if (as_json) {
        json body{{"count", labels.size()}};
        if (list_labels) {
          json listed = json::array();
          for (const MonomialLabel& label : labels)
            listed.push_back(monomial_label_json(label));
          body["labels"] = std::move(listed);
        }
        emit(body);
      } else {
        std::cout << "count " << labels.size() << "\n";
        if (list_labels)
          for (const MonomialLabel& label : labels)
            std::cout << monomial_label_text(label, tau_first) << "\n";
      }
      return 0;
    }

    if (onh->parsed()) {
      if (onh_mult->parsed()) {
        if (opt_ell < opt_n) {
          // The quotient is the zero algebra; every product collapses.
          if (as_json)
            emit({{"result", onh_element_json(
                                 OnhElement<Rational>::zero(static_cast<int>(opt_n)))}});
          else
            std::cout << "0\n";
          return 0;
        }
        const OnhAlgebra<Rational> algebra(static_cast<int>(opt_n), opt_ell);
        const auto a =
            algebra.reduce(parse_onh_element(static_cast<int>(opt_n), a_text));
        const auto b =
            algebra.reduce(parse_onh_element(static_cast<int>(opt_n), b_text));
        const auto product = algebra.multiply(a, b);
        if (as_json)
          emit({{"result", onh_element_json(product)}});
        else
          std::cout << onh_element_text(product) << "\n";
        return 0;
      }
      if (onh_table->parsed()) {
        json entries = json::array();
        for (long n = 1; n <= max_n; ++n)
          for (long ell = 1; ell <= max_ell; ++ell) {
            const OnhQuery q = onh_query(n, ell);
            const BigInt value = ungraded_dim(q.datum, q.lambda, q.nu, q.nu);
            if (as_json)
              entries.push_back({{"n", n}, {"ell", ell}, {"dim", big_json(value)}});
            else
              std::cout << "n=" << n << " ell=" << ell << " dim=" << value.get_str()
                        << "\n";
          }
        if (as_json) emit({{"entries", std::move(entries)}});
        return 0;
      }
      const QPiPolynomial census = graded_super_dimension(opt_n, opt_ell);
      if (as_json)
        emit({{"dim", qpi_json(census)}});
      else
        std::cout << census.to_text() << "\n";
      return 0;
    }

    if (connectivity->parsed()) {
      const CartanSuperdatum datum = load_config(config_path);
      const IdempotentGraph graph =
          build_graph(datum, parse_weight(datum, lambda_text),
                      parse_root_vector(datum, beta_text), cap);
      const ConnectivityReport report = connectivity_report(graph);
      if (as_json) {
        json vertices = json::array();
        for (const WeightSeq& nu : graph.vertices)
          vertices.push_back(seq_text(datum, nu));
        json edges = json::array();
        for (const auto& [i, j] : graph.edges) edges.push_back({i, j});
        emit({{"vertices", std::move(vertices)},
              {"edges", std::move(edges)},
              {"components", report.components},
              {"verdict", report.verdict}});
      } else {
        std::cout << "vertices: " << graph.vertices.size() << "\n"
                  << "edges: " << graph.edges.size() << "\n"
                  << "components: " << report.components.size() << "\n"
                  << "verdict: " << report.verdict << "\n";
        for (std::size_t c = 0; c < report.components.size(); ++c) {
          std::cout << "component " << (c + 1) << ":";
          for (std::size_t k = 0; k < report.components[c].size(); ++k)
            std::cout << (k == 0 ? " " : " | ")
                      << seq_text(datum, graph.vertices[report.components[c][k]]);
          std::cout << "\n";
        }
      }
      return 0;
    }

    std::cerr << "error: no verb dispatched\n";
    return 1;
  } catch (const ValidationError& e) {
    std::cerr << "validation error:\n";
    for (const ValidationIssue& issue : e.report().issues)
      std::cerr << "- " << validation_code_name(issue.code) << ": " << issue.message
                << "\n";
    return 2;
  } catch (const GuardError& e) {
    std::cerr << "guard tripped: " << e.what() << "\n";
    return 3;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
