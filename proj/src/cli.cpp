#include "kerncalc/cli.hpp"

#include <algorithm>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "kerncalc/fixtures.hpp"
#include "kerncalc/io.hpp"
#include "kerncalc/lattice.hpp"

namespace kerncalc::cli {

namespace {

using io::json;

std::pair<std::string, std::string> split_pair(const std::string& s, const char* what) {
  const auto comma = s.find(',');
  if (comma == std::string::npos || s.find(',', comma + 1) != std::string::npos)
    throw CLI::ValidationError(what, "expected two labels separated by a comma");
  return {s.substr(0, comma), s.substr(comma + 1)};
}

struct Context {
  std::istream& in;
  double tol = kDefaultTol;

  io::KernelDocument kernel(const std::string& path) const {
    return io::parse_kernel_document(io::read_text(path, in));
  }
  json document(const std::string& path) const {
    try {
      return json::parse(io::read_text(path, in));
    } catch (const json::exception& e) {
      throw io::ParseError(e.what());
    }
  }
};

// Kernel-valued results over the input's points keep the input's measure.
json with_measure(const Kernel& k, const io::KernelDocument& source) {
  return io::to_json(io::KernelDocument{k, source.measure});
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite kernel and distance calculator", "kerncalc"};
  app.require_subcommand(1);
  app.fallthrough();
  double tol = kDefaultTol;
  app.add_option("--tol", tol, "Tolerance for every predicate")->check(CLI::NonNegativeNumber);

  std::function<json(const Context&)> action;
  auto add = [&](const char* name, const char* help) { return app.add_subcommand(name, help); };

  std::string path, path2;

  {
    auto* sub = add("classify", "Check conditions (a)-(f) and report the taxonomy");
    auto* almost = sub->add_flag("--almost", "Include the almost-distance report");
    sub->add_option("file", path)->required();
    sub->callback([&, sub, almost] {
      action = [&, almost](const Context& c) {
        const auto doc = c.kernel(path);
        json report = io::to_json(classify(doc.kernel, c.tol), doc.kernel.points());
        if (!*almost) return report;
        return json{{"classification", std::move(report)},
                    {"almost", io::to_json(almost_distance_report(doc.kernel, c.tol), doc.kernel.points())}};
      };
      (void)sub;
    });
  }
  {
    auto* sub = add("hat", "Largest distance below a kernel (shortest chains)");
    auto* chain = sub->add_option("--chain", "Report a minimizing chain for X,Y instead");
    sub->add_option("file", path)->required();
    sub->callback([&, chain] {
      std::optional<std::pair<std::string, std::string>> ends;
      if (*chain) ends = split_pair(chain->as<std::string>(), "--chain");
      action = [&, ends](const Context& c) {
        const auto doc = c.kernel(path);
        if (!ends) return with_measure(hat(doc.kernel), doc);
        const auto& pts = doc.kernel.points();
        const auto x = pts.index_of(ends->first), y = pts.index_of(ends->second);
        const auto steps = hat_chain(doc.kernel, x, y, c.tol);
        json labels = json::array();
        for (auto i : steps) labels.push_back(pts.label(i));
        return json{{"from", ends->first},
                    {"to", ends->second},
                    {"value", io::number(hat(doc.kernel)(x, y))},
                    {"chain", std::move(labels)}};
      };
    });
  }
  {
    auto* sub = add("shat", "Largest kernel below k that is right-dominated by s");
    sub->add_option("kernel", path)->required();
    sub->add_option("sigma", path2)->required();
    sub->callback([&] {
      action = [&](const Context& c) {
        const auto k = c.kernel(path);
        return with_measure(s_hat(k.kernel, c.kernel(path2).kernel), k);
      };
    });
  }
  {
    auto* sub = add("symmetrize", "Combine a kernel with its transpose");
    auto* mode = sub->add_option("--mode", "min, max, sum or pnorm")
                     ->check(CLI::IsMember({"min", "max", "sum", "pnorm"}))
                     ->default_val("max");
    auto* p = sub->add_option("--p", "Exponent for --mode pnorm")->default_val(2.0);
    sub->add_option("file", path)->required();
    sub->callback([&, mode, p] {
      const auto m = mode->as<std::string>();
      CombineMode cm = combine_mode::Max{};
      if (m == "min") cm = combine_mode::Min{};
      if (m == "sum") cm = combine_mode::Sum{};
      if (m == "pnorm") cm = combine_mode::PNorm{p->as<double>()};
      action = [&, cm](const Context& c) {
        const auto doc = c.kernel(path);
        return with_measure(symmetrize(doc.kernel, cm), doc);
      };
    });
  }
  {
    auto* sub = add("zerodiag", "Split a kernel into zero-diagonal and diagonal parts");
    sub->add_option("file", path)->required();
    sub->callback([&] {
      action = [&](const Context& c) { return io::to_json(zero_diag_projection(c.kernel(path).kernel)); };
    });
  }
  {
    auto* sub = add("quotient", "Collapse points at distance zero");
    sub->add_option("file", path)->required();
    sub->callback([&] {
      action = [&](const Context& c) {
        const auto doc = c.kernel(path);
        return io::to_json(quotient(doc.kernel, c.tol), doc.kernel.points());
      };
    });
  }
  {
    auto* sub = add("topology", "Enumerate the open sets generated by a kernel");
    auto* eps = sub->add_option("--eps", "Comma-separated radii")->delimiter(',')->expected(1, CLI::detail::expected_max_vector_size);
    auto* max_n = sub->add_option("--max-n", "Refuse larger point sets")
                      ->check(CLI::Range(1, static_cast<int>(kHardTopologyCap)))
                      ->default_val(kDefaultTopologyCap);
    sub->add_option("file", path)->required();
    sub->callback([&, eps, max_n] {
      std::optional<std::vector<double>> grid;
      if (*eps) grid = eps->as<std::vector<double>>();
      const auto cap = max_n->as<std::size_t>();
      action = [&, grid, cap](const Context& c) {
        const auto doc = c.kernel(path);
        return io::to_json(kappa_topology(doc.kernel, grid, cap), doc.kernel.points());
      };
    });
  }
  {
    auto* sub = add("glue", "Glue the two sides of a bridge into one distance");
    auto* prefix = sub->add_flag("--prefix", "Prefix labels with X: and Y:");
    sub->add_option("bridge", path)->required();
    sub->callback([&, prefix] {
      const auto policy = *prefix ? LabelPolicy::Prefix : LabelPolicy::Reject;
      action = [&, policy](const Context& c) {
        return io::to_json(glue(io::bridge_from_json(c.document(path), c.tol), policy));
      };
    });
  }
  {
    auto* sub = add("fp-bridge", "Separable bridge dominating a bridge");
    auto* base = sub->add_option("--base", "Base points X,Y")->required();
    sub->add_option("bridge", path)->required();
    sub->callback([&, base] {
      const auto ends = split_pair(base->as<std::string>(), "--base");
      action = [&, ends](const Context& c) {
        return io::to_json(flood_pestov_dominating(io::bridge_from_json(c.document(path), c.tol), ends.first,
                                                   ends.second));
      };
    });
  }
  {
    auto* sub = add("embed", "Canonical embedding into L2 and the induced pseudometric");
    sub->add_option("file", path)->required();
    sub->callback([&] {
      action = [&](const Context& c) {
        const auto doc = c.kernel(path);
        const auto [e, rho] = canonical_embedding(doc.kernel, doc.space());
        return io::embedding_to_json(e, rho);
      };
    });
  }
  {
    auto* sub = add("convolve", "Kernel product k * phi over the measure of k");
    sub->add_option("kernel", path)->required();
    sub->add_option("phi", path2)->required();
    sub->callback([&] {
      action = [&](const Context& c) {
        const auto k = c.kernel(path);
        const auto m = k.space();
        return io::to_json(star(k.kernel, c.kernel(path2).kernel, m), m);
      };
    });
  }
  {
    auto* sub = add("meandist", "Mean distance function x -> sum_z d(x,z) mu(z)");
    sub->add_option("file", path)->required();
    sub->callback([&] {
      action = [&](const Context& c) {
        const auto doc = c.kernel(path);
        return io::to_json(mean_dist(doc.kernel, doc.space(), c.tol));
      };
    });
  }
  {
    auto* sub = add("separation", "Measure of separating sets across a radius grid");
    auto* grid = sub->add_option("--eps-grid", "Comma-separated radii")->delimiter(',')->expected(1, CLI::detail::expected_max_vector_size);
    sub->add_option("file", path)->required();
    sub->callback([&, grid] {
      const auto eps = *grid ? grid->as<std::vector<double>>() : default_separation_grid();
      action = [&, eps](const Context& c) {
        const auto doc = c.kernel(path);
        return io::to_json(separation_profile(doc.kernel, doc.space(), eps, c.tol));
      };
    });
  }
  {
    auto* sub = add("udist", "Bi-Lipschitz constants and log-ratio distance between kernels");
    sub->add_option("kernel", path)->required();
    sub->add_option("sigma", path2)->required();
    sub->callback([&] {
      action = [&](const Context& c) {
        return io::to_json(bilip_constants(c.kernel(path).kernel, c.kernel(path2).kernel, c.tol));
      };
    });
  }
  {
    auto* sub = add("ivt", "Lipschitz constants of the embedding map and its inverse");
    sub->add_option("kernel", path)->required();
    sub->add_option("sigma", path2)->required();
    sub->callback([&] {
      action = [&](const Context& c) {
        const auto k = c.kernel(path);
        return io::to_json(ivt_check(k.kernel, c.kernel(path2).kernel, k.space(), c.tol));
      };
    });
  }
  {
    auto* sub = add("fixture", "Uniform interval or circle grid with its distance");
    std::string kind, metric;
    auto* kind_opt = sub->add_option("kind", "interval or circle")->check(CLI::IsMember({"interval", "circle"}))->required();
    auto* n_opt = sub->add_option("--n", "Number of points")->check(CLI::PositiveNumber)->default_val(100);
    auto* metric_opt =
        sub->add_option("--metric", "euclid, arc or chord")->check(CLI::IsMember({"euclid", "arc", "chord"}))->default_val("euclid");
    sub->callback([&, kind_opt, n_opt, metric_opt] {
      const auto k = parse_fixture_kind(kind_opt->as<std::string>());
      const auto m = parse_fixture_metric(metric_opt->as<std::string>());
      const auto n = n_opt->as<std::size_t>();
      action = [k, m, n](const Context&) {
        const auto f = make_fixture(k, n, m);
        return io::to_json(f.distance, f.space);
      };
    });
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "kerncalc: " << e.what() << "\n";
    return 2;
  }

  try {
    const Context ctx{in, tol};
    out << io::dump(action(ctx));
    return 0;
  } catch (const io::ParseError& e) {
    err << "kerncalc: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    json j{{"code", std::string(to_string(e.code()))}, {"message", e.what()}};
    if (e.witness()) {
      j["witness"] = {{"indices", e.witness()->points}, {"magnitude", io::number(e.witness()->magnitude)}};
    }
    out << io::dump(json{{"error", std::move(j)}});
    return 1;
  }
}

}  // namespace kerncalc::cli
