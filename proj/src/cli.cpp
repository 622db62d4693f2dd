#include "hb/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"

#include "acceptance.hpp"
#include "hb/chain_map.hpp"
#include "hb/construction.hpp"
#include "hb/helly.hpp"
#include "hb/homology.hpp"
#include "hb/io.hpp"
#include "hb/obstruction.hpp"

namespace hb::cli {

namespace {

struct Context {
  std::istream& in;
  std::ostream& out;
  std::ostream& err;
  bool stdin_used = false;
};

std::string read_source(Context& ctx, const std::string& path, const char* what) {
  if (path.empty() || path == "-") {
    if (ctx.stdin_used) throw InputError(std::string("only one input can come from standard input (") + what + ")");
    ctx.stdin_used = true;
    return std::string(std::istreambuf_iterator<char>(ctx.in), {});
  }
  std::ifstream file(path);
  if (!file) throw InputError("cannot open " + path);
  return std::string(std::istreambuf_iterator<char>(file), {});
}

Json read_json(Context& ctx, const std::string& path, const char* what) {
  return parse_json(read_source(ctx, path, what));
}

void emit(Context& ctx, const Json& j) { ctx.out << j.dump() << "\n"; }

// --budget wins over HB_BUDGET, which wins over the default.
std::size_t resolve_budget(std::optional<std::size_t> flag, std::size_t fallback) {
  return flag ? *flag : budget_from_env(fallback);
}

Json index_list(std::uint64_t mask) { return from_mask(mask); }

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  Context ctx{in, out, err};
  CLI::App app{"Z2 homology, van Kampen obstructions, Helly numbers and constrained chain maps", "hb"};
  app.require_subcommand(1);

  std::string complex_path;
  std::string family_path;
  std::string bundle_path;
  std::optional<std::size_t> budget;
  int dim = 0;
  int b = 1;
  bool reduced = false;

  auto add_budget = [&](CLI::App* sub) {
    sub->add_option("--budget", budget, "Cell or family-size budget (overrides HB_BUDGET)");
  };

  auto* betti_cmd = app.add_subcommand("betti", "Betti numbers of a complex");
  betti_cmd->add_option("--complex", complex_path, "Complex JSON (default: stdin)");
  betti_cmd->add_flag("--reduced", reduced, "Reduced Betti numbers");

  auto* helly_cmd = app.add_subcommand("helly", "Helly number of a family");
  helly_cmd->add_option("--family", family_path, "Family JSON (default: stdin)");
  add_budget(helly_cmd);

  std::optional<int> max_index;
  auto* audit_cmd = app.add_subcommand("audit", "Reduced Betti numbers of all proper subfamily intersections");
  audit_cmd->add_option("--family", family_path, "Family JSON (default: stdin)");
  audit_cmd->add_option("--dim", dim, "Ambient dimension d")->required();
  audit_cmd->add_option("--max-index", max_index, "Highest audited degree (default ceil(d/2)-1)");
  add_budget(audit_cmd);

  std::string witness_path;
  auto* obs_cmd = app.add_subcommand("obstruction", "Z2 van Kampen obstruction in R^d");
  obs_cmd->add_option("--complex", complex_path, "Complex JSON (default: stdin)");
  obs_cmd->add_option("--dim", dim, "Target dimension d")->required();
  obs_cmd->add_option("--witness", witness_path, "Write the cocycle and any coboundary witness here");
  add_budget(obs_cmd);

  bool quotient = false;
  auto* dp_cmd = app.add_subcommand("deleted-product", "Deleted product and its Z2 quotient");
  dp_cmd->add_option("--complex", complex_path, "Complex JSON (default: stdin)");
  dp_cmd->add_flag("--quotient", quotient, "Also report the quotient by the swap");
  add_budget(dp_cmd);

  auto* sd_cmd = app.add_subcommand("subdivide", "Barycentric subdivision");
  sd_cmd->add_option("--complex", complex_path, "Complex JSON (default: stdin)");

  int p = 1;
  int q = 1;
  auto* eml_cmd = app.add_subcommand("eml", "Staircase triangulation of a product of simplices");
  eml_cmd->add_option("--p", p, "First factor dimension")->check(CLI::NonNegativeNumber);
  eml_cmd->add_option("--q", q, "Second factor dimension")->check(CLI::NonNegativeNumber);

  auto* examples_cmd = app.add_subcommand("examples", "Example generators");
  examples_cmd->require_subcommand(1);
  std::string kind;
  int d = 2;
  int n = 3;
  int k = 1;
  auto* gen_cmd = examples_cmd->add_subcommand("gen", "Emit an example family or complex as JSON");
  gen_cmd->add_option("kind", kind, "gamma | gamma3prime | skeleton | interval | tight")
      ->required()
      ->check(CLI::IsMember({"gamma", "gamma3prime", "skeleton", "interval", "tight"}));
  gen_cmd->add_option("--b", b, "Number of copies (gamma)");
  gen_cmd->add_option("--d", d, "Dimension (gamma, tight)");
  gen_cmd->add_option("--n", n, "Number of members (skeleton, interval, tight)");
  gen_cmd->add_option("--k", k, "Skeleton dimension (skeleton, tight)");

  std::optional<int> dim_cap;
  auto* build_cmd = app.add_subcommand("build-ccm", "Build a constrained chain map of K into a family");
  build_cmd->add_option("--complex", complex_path, "Complex JSON")->required();
  build_cmd->add_option("--family", family_path, "Family JSON")->required();
  build_cmd->add_option("--b", b, "Betti bound b")->required();
  build_cmd->add_option("--dim-cap", dim_cap, "Reject complexes above this dimension");

  auto* verify_cmd = app.add_subcommand("verify", "Audit a bundle");
  verify_cmd->require_subcommand(1);
  auto* verify_constrained_cmd = verify_cmd->add_subcommand("constrained", "Audit a constrained chain map bundle");
  verify_constrained_cmd->add_option("--bundle", bundle_path, "Bundle JSON (default: stdin)");

  auto* selftest_cmd = app.add_subcommand("selftest", "Run the acceptance suite");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "hb: " << e.what() << "\n";
    return kInputError;
  }

  try {
    if (betti_cmd->parsed()) {
      const auto c = complex_from_json(read_json(ctx, complex_path, "complex"));
      emit(ctx, Json{{"betti", betti_vector(c, reduced)}});
      return kOk;
    }
    if (helly_cmd->parsed()) {
      const auto f = family_from_json(read_json(ctx, family_path, "family"));
      emit(ctx, Json{{"helly", helly_number(f, resolve_budget(budget, kDefaultFamilyBudget)).helly}});
      return kOk;
    }
    if (audit_cmd->parsed()) {
      const auto f = family_from_json(read_json(ctx, family_path, "family"));
      const auto report = hypothesis_audit(f, dim, max_index, resolve_budget(budget, kDefaultFamilyBudget));
      Json rows = Json::array();
      for (const auto& row : report.rows) {
        rows.push_back(Json{{"subfamily", index_list(row.subfamily)}, {"reduced_betti", row.reduced_betti}});
      }
      emit(ctx, Json{{"d", report.d},
                     {"max_index", report.max_index},
                     {"max_betti", report.max_betti},
                     {"helly", report.helly},
                     {"rows", std::move(rows)}});
      return kOk;
    }
    if (obs_cmd->parsed()) {
      const auto c = complex_from_json(read_json(ctx, complex_path, "complex"));
      ObstructionOptions options;
      options.cell_budget = resolve_budget(budget, kDefaultCellBudget);
      const auto res = obstruction_nonzero(c, dim, options);
      if (!witness_path.empty()) {
        auto bits = [](const BitVector& v) {
          std::vector<int> out;
          for (std::size_t i = 0; i < v.size(); ++i) out.push_back(v.get(i) ? 1 : 0);
          return out;
        };
        Json cells = Json::array();
        for (const auto& cell : res.quotient.cells[static_cast<std::size_t>(dim)]) {
          cells.push_back(Json::array({cell.left.vertices(), cell.right.vertices()}));
        }
        Json w{{"d", dim}, {"params", res.params}, {"cells", cells}, {"cocycle", bits(res.cocycle)}};
        w["witness"] = res.witness ? Json(bits(*res.witness)) : Json(nullptr);
        std::ofstream file(witness_path);
        if (!file) throw InputError("cannot write " + witness_path);
        file << w.dump() << "\n";
      }
      emit(ctx, Json{{"nonzero", res.nonzero}});
      return kOk;
    }
    if (dp_cmd->parsed()) {
      const auto c = complex_from_json(read_json(ctx, complex_path, "complex"));
      const auto dp = deleted_product(c, resolve_budget(budget, kDefaultCellBudget));
      Json j{{"f_vector", dp.complex.f_vector()},
             {"betti", betti_vector(dp.complex.chains)},
             {"free", dp.swap.is_free()}};
      if (quotient) {
        const auto quo = quotient_by_involution(dp.complex, dp.swap);
        j["quotient"] = Json{{"f_vector", quo.f_vector()}, {"betti", betti_vector(quo.chains)}};
      }
      emit(ctx, j);
      return kOk;
    }
    if (sd_cmd->parsed()) {
      const auto c = complex_from_json(read_json(ctx, complex_path, "complex"));
      const auto sd = barycentric_subdivision(c);
      Json labels = Json::array();
      for (const auto& l : sd.labels) labels.push_back(l.vertices());
      emit(ctx, Json{{"complex", to_json(sd.complex)}, {"labels", labels}});
      return kOk;
    }
    if (eml_cmd->parsed()) {
      const auto tri = eml_triangulation(p, q);
      Json simplices = Json::array();
      for (const auto& s : tri.simplices) {
        Json chain = Json::array();
        for (const auto& [x, y] : s) chain.push_back(Json::array({x, y}));
        simplices.push_back(chain);
      }
      emit(ctx, Json{{"p", p},
                     {"q", q},
                     {"count", tri.simplices.size()},
                     {"flip_equivariant", eml_flip_check(p, q)},
                     {"simplices", simplices}});
      return kOk;
    }
    if (gen_cmd->parsed()) {
      if (kind == "gamma") emit(ctx, to_json(gamma_family(b, d)));
      if (kind == "gamma3prime") emit(ctx, to_json(gamma3_prime()));
      if (kind == "skeleton") emit(ctx, to_json(skeleton_family(n, k)));
      if (kind == "interval") emit(ctx, to_json(interval_family(n)));
      if (kind == "tight") emit(ctx, to_json(tight_family(d, k, n)));
      return kOk;
    }
    if (build_cmd->parsed()) {
      const auto c = complex_from_json(read_json(ctx, complex_path, "complex"));
      if (dim_cap && c.dimension() > *dim_cap) {
        throw InputError("complex has dimension " + std::to_string(c.dimension()) + " above --dim-cap");
      }
      const auto f = std::make_shared<const SetFamily>(family_from_json(read_json(ctx, family_path, "family")));
      if (f->size() > 64) throw InputError("families are limited to 64 members");
      const auto bundle = build_ccm(c, f, b);
      const auto violations = verify_constrained(bundle);
      Json report{{"verified", violations.empty()},
                  {"empty_intersection", f->u_set_mask(0).empty()},
                  {"almost_embedding", is_homological_almost_embedding(bundle.gamma).ok}};
      emit(ctx, Json{{"bundle", to_json(bundle)}, {"report", report}});
      return violations.empty() ? kOk : kFalsified;
    }
    if (verify_constrained_cmd->parsed()) {
      auto j = read_json(ctx, bundle_path, "bundle");
      if (j.is_object() && j.contains("bundle")) j = j.at("bundle");
      const auto bundle = bundle_from_json(j);
      const auto violations = verify_constrained(bundle);
      Json list = Json::array();
      for (const auto& v : violations) list.push_back(Json{{"kind", kind_name(v.kind)}, {"message", v.message}});
      Json report{{"verified", violations.empty()}, {"violations", list}};
      if (violations.empty()) {
        report["almost_embedding"] = almost_embedding_verdict(bundle);
      }
      emit(ctx, report);
      return violations.empty() ? kOk : kFalsified;
    }
    if (selftest_cmd->parsed()) {
      bool all = true;
      Json results = Json::array();
      for (const auto& r : acceptance::run_all()) {
        all = all && r.pass;
        results.push_back(Json{{"criterion", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
        err << acceptance::format(r, true) << "\n";
      }
      emit(ctx, Json{{"pass", all}, {"criteria", results}});
      return all ? kOk : kFalsified;
    }
  } catch (const InputError& e) {
    err << "hb: input error: " << e.what() << "\n";
    return kInputError;
  } catch (const BudgetExceeded& e) {
    err << "hb: budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const InsufficientFamily& e) {
    err << "hb: insufficient family: " << e.what() << "\n";
    return kFalsified;
  } catch (const DegenerateConfiguration& e) {
    err << "hb: degenerate configuration: " << e.what() << "\n";
    return kFalsified;
  } catch (const InvariantViolation& e) {
    err << "hb: invariant violation: " << e.what() << "\n";
    return kFalsified;
  }
  err << "hb: no subcommand handled\n";
  return kInputError;
}

}  // namespace hb::cli
