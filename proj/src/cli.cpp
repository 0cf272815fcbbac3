#include "orbitslice/cli.hpp"

#include <fstream>
#include <algorithm>
#include <functional>
#include <ostream>

#include "CLI11.hpp"
#include "orbitslice/analysis.hpp"
#include "orbitslice/error.hpp"
#include "orbitslice/interop.hpp"
#include "orbitslice/order.hpp"
#include "orbitslice/patterns.hpp"
#include "orbitslice/slice.hpp"

namespace orbitslice {
namespace {

std::string join_indices(std::span<const int> indices) {
  std::string s;
  for (int i : indices) s += (s.empty() ? "" : ",") + std::to_string(i + 1);
  return s;
}

Json one_based(std::span<const int> indices) {
  Json j = Json::array();
  for (int i : indices) j.push_back(i + 1);
  return j;
}

std::vector<int> parse_indices(const std::string& text) {
  std::vector<int> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(item, &used);
      if (used != item.size()) throw std::invalid_argument(item);
      out.push_back(v - 1);
    } catch (const std::exception&) {
      throw Error(ErrorCode::BadIndices, "not an index list: " + text);
    }
  }
  return out;
}

unsigned parse_checks(const std::vector<std::string>& names) {
  if (names.empty()) return kCasAll;
  unsigned bits = 0;
  for (const std::string& n : names) {
    if (n == "radical") bits |= kCasRadical;
    else if (n == "dim") bits |= kCasDimension;
    else if (n == "type") bits |= kCasGorensteinType;
    else if (n == "multiplicity") bits |= kCasMultiplicity;
    else if (n == "all") bits |= kCasAll;
  }
  return bits;
}

// Clan tokens such as "-1221+" or "--" would otherwise be read as options.
// A bare "--" followed by more arguments stays the separator the first time;
// "++" is CLI11's subcommand terminator.
std::vector<std::string> shield_clans(int argc, const char* const* argv) {
  std::vector<std::string> args;
  bool separator_seen = false;
  for (int k = 1; k < argc; ++k) {
    std::string t = argv[k];
    const bool clan_like = !t.empty() && t.find('-') != std::string::npos &&
                           t.find_first_not_of("+-0123456789,") == std::string::npos;
    if (t == "++") {
      t = "+,+";
    } else if (t == "--" && !separator_seen && k + 1 < argc) {
      separator_seen = true;
    } else if (clan_like && !(t.size() > 1 && t[0] == '-' && t.find_first_not_of("0123456789", 1) == std::string::npos)) {
      std::string shielded;
      for (char ch : t) shielded += ch == '-' ? std::string("\u2212") : std::string(1, ch);
      t = shielded;
    }
    args.push_back(t);
  }
  return args;
}

struct Context {
  std::ostream& out;
  bool json = false;
  bool m2 = false;

  void emit(const Json& j) const { out << j.dump(2) << "\n"; }
  NameStyle style() const { return m2 ? NameStyle::Macaulay2 : NameStyle::Latex; }
};

void print_embedding(const Context& ctx, const IntervalEmbedding& e) {
  ctx.out << "{" << join_indices(e.indices) << "} [" << e.beta.str() << ", " << e.theta.str() << "]\n";
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Clans, closure order and slice ideals of GL(p+q)/GL(p)xGL(q) orbit closures", "orbitslice"};
  app.require_subcommand(1);
  app.fallthrough();
  Context ctx{out};
  app.add_flag("--json", ctx.json, "Machine-readable output");
  std::function<void()> action;

  int p = 0, q = 0;
  std::string a, b, c, indices_text, output_path;
  bool dot = false, lex = false, show_inverse = false, show_base = false;
  std::vector<int> aux;
  std::vector<std::string> checks;

  auto clan_arg = [](CLI::App* sub, const char* name, std::string& slot, const char* help) {
    sub->add_option(name, slot, help)->required();
  };
  auto pq_args = [&](CLI::App* sub) {
    sub->add_option("p", p, "Plus weight")->required()->check(CLI::NonNegativeNumber);
    sub->add_option("q", q, "Minus weight")->required()->check(CLI::NonNegativeNumber);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List all (p,q)-clans");
  pq_args(enumerate);
  enumerate->callback([&] {
    action = [&] {
      const auto clans = enumerate_clans(p, q);
      if (ctx.json) {
        Json list = Json::array();
        for (const Clan& x : clans) list.push_back(to_json(x));
        ctx.emit({{"p", p}, {"q", q}, {"count", clans.size()}, {"clans", std::move(list)}});
      } else {
        for (const Clan& x : clans) out << x.str() << "\n";
      }
    };
  });

  auto* len = app.add_subcommand("length", "Length of a clan");
  clan_arg(len, "clan", a, "Clan");
  len->callback([&] {
    action = [&] {
      const Clan x = Clan::parse(a);
      if (ctx.json) {
        ctx.emit({{"clan", to_json(x)}, {"length", length(x)}});
      } else {
        out << length(x) << "\n";
      }
    };
  });

  auto* cov = app.add_subcommand("covers", "Clans covering a clan");
  clan_arg(cov, "clan", a, "Clan");
  cov->callback([&] {
    action = [&] {
      const auto up = covers(Clan::parse(a));
      if (ctx.json) {
        Json list = Json::array();
        for (const Clan& x : up) list.push_back(x.str());
        ctx.emit({{"clan", Clan::parse(a).str()}, {"covers", std::move(list)}});
      } else {
        for (const Clan& x : up) out << x.str() << "\n";
      }
    };
  });

  auto* poset = app.add_subcommand("poset", "Closure order on (p,q)-clans");
  pq_args(poset);
  poset->add_flag("--dot", dot, "Graphviz output");
  poset->callback([&] {
    action = [&] {
      if (p + q < 1) throw Error(ErrorCode::EmptyInput, "p + q must be positive");
      const auto h = hasse(p, q);
      if (dot) {
        out << emit_dot(*h);
      } else if (ctx.json) {
        Json nodes = Json::array();
        for (int k = 0; k < h->size(); ++k) {
          Json up = Json::array();
          for (int u : h->up(k)) up.push_back(h->element(u).str());
          nodes.push_back({{"clan", h->element(k).str()}, {"length", h->length(k)}, {"covers", std::move(up)}});
        }
        ctx.emit({{"p", p}, {"q", q}, {"elements", std::move(nodes)}});
      } else {
        for (int k = 0; k < h->size(); ++k) {
          out << h->element(k).str() << " " << h->length(k) << " ->";
          for (int u : h->up(k)) out << " " << h->element(u).str();
          out << "\n";
        }
      }
    };
  });

  auto* leqc = app.add_subcommand("leq", "Is A below B in closure order?");
  clan_arg(leqc, "A", a, "Lower clan");
  clan_arg(leqc, "B", b, "Upper clan");
  leqc->callback([&] {
    action = [&] {
      const bool r = leq(Clan::parse(a), Clan::parse(b));
      if (ctx.json) {
        ctx.emit({{"a", Clan::parse(a).str()}, {"b", Clan::parse(b).str()}, {"leq", r}});
      } else {
        out << (r ? "true" : "false") << "\n";
      }
    };
  });

  auto* pat = app.add_subcommand("pattern", "Does BIG include SMALL?");
  clan_arg(pat, "big", a, "Big clan");
  clan_arg(pat, "small", b, "Pattern");
  pat->callback([&] {
    action = [&] {
      const auto w = includes(Clan::parse(a), Clan::parse(b));
      if (ctx.json) {
        ctx.emit({{"big", Clan::parse(a).str()},
                  {"small", Clan::parse(b).str()},
                  {"witness", w ? one_based(*w) : Json(nullptr)}});
      } else {
        out << (w ? join_indices(*w) : "none") << "\n";
      }
    };
  });

  auto* emb = app.add_subcommand("interval-embed", "Interval embeddings of [ALPHA, GAMMA] under THETA");
  clan_arg(emb, "theta", a, "Big upper clan");
  clan_arg(emb, "alpha", b, "Small lower clan");
  clan_arg(emb, "gamma", c, "Small upper clan");
  emb->callback([&] {
    action = [&] {
      const auto es = find_interval_embeddings(Clan::parse(a), Clan::parse(b), Clan::parse(c));
      if (ctx.json) {
        Json list = Json::array();
        for (const auto& e : es) list.push_back(to_json(e));
        ctx.emit({{"embeddings", std::move(list)}});
      } else if (es.empty()) {
        out << "none\n";
      } else {
        for (const auto& e : es) print_embedding(ctx, e);
      }
    };
  });

  auto* mat = app.add_subcommand("matrix", "Generic slice matrix of a clan");
  clan_arg(mat, "clan", a, "Clan");
  mat->add_flag("--inverse", show_inverse, "Print the inverse");
  mat->add_flag("--base", show_base, "Print the base point");
  mat->add_option("--aux", aux, "Auxiliary matrix [I;J] of the inverse")->expected(2);
  mat->callback([&] {
    action = [&] {
      const Clan x = Clan::parse(a);
      const auto data = slice_data(x);
      PolyMatrix shown = data->matrix;
      if (show_inverse) shown = data->inv;
      if (!aux.empty()) shown = aux_matrix(data->inv, aux[0], aux[1], x.q());
      if (ctx.json) {
        std::vector<int> w;
        for (int v : data->w) w.push_back(v + 1);
        Json j = {{"clan", to_json(x)}, {"w", w}, {"determinant", data->det.get_str()}, {"generic", to_json(data->generic)}};
        if (show_base) j["basePoint"] = to_json(base_point(x));
        if (show_inverse || !aux.empty()) j["matrix"] = to_json(shown);
        ctx.emit(j);
        return;
      }
      std::string w;
      for (int v : data->w) w += std::to_string(v + 1) + (data->w.size() >= 10 ? " " : "");
      out << "w = " << w << "\n";
      out << "variables = " << data->generic.var_count() << "\n";
      out << "det = " << data->det.get_str() << "\n";
      out << (show_base ? latex_matrix(base_point(x)) : latex_matrix(shown));
    };
  });

  auto* ideal = app.add_subcommand("ideal", "Generators of the slice ideal");
  clan_arg(ideal, "gamma", a, "Orbit closure clan");
  clan_arg(ideal, "alpha", b, "Slice clan");
  ideal->add_flag("--m2", ctx.m2, "Macaulay2 variable names");
  ideal->callback([&] {
    action = [&] {
      const auto I = generators(Clan::parse(a), Clan::parse(b));
      if (ctx.json) {
        ctx.emit(to_json(I));
      } else {
        for (const Polynomial& g : I.generators) out << g.to_string(ctx.style()) << "\n";
      }
    };
  });

  auto* gb = app.add_subcommand("gb", "Reduced Groebner basis of the slice ideal");
  clan_arg(gb, "gamma", a, "Orbit closure clan");
  clan_arg(gb, "alpha", b, "Slice clan");
  gb->add_flag("--lex", lex, "Lexicographic order instead of grevlex");
  gb->add_flag("--m2", ctx.m2, "Macaulay2 variable names");
  gb->callback([&] {
    action = [&] {
      GroebnerOptions opt;
      if (lex) opt.order = TermOrder::Lex;
      const auto data = pair_data(Clan::parse(a), Clan::parse(b), opt);
      if (ctx.json) {
        ctx.emit(to_json(data->gb));
      } else {
        for (const Polynomial& g : data->gb.polynomials()) out << g.to_string(ctx.style()) << "\n";
        out << "dim = " << data->gb.dimension() << "\n";
      }
    };
  });

  auto* smooth = app.add_subcommand("smooth", "Is Y_GAMMA smooth along the orbit of ALPHA?");
  clan_arg(smooth, "gamma", a, "Orbit closure clan");
  clan_arg(smooth, "alpha", b, "Slice clan");
  smooth->callback([&] {
    action = [&] {
      const auto r = smooth_at(Clan::parse(a), Clan::parse(b));
      if (ctx.json) {
        ctx.emit(to_json(r));
      } else {
        out << (r.smooth ? "Smooth" : "Singular") << " varietyDim=" << r.variety_dim << " tangentDim=" << r.tangent_dim
            << " (contingent on radicality of generators)\n";
      }
    };
  });

  auto* ms = app.add_subcommand("maxsing", "Maximal singular orbits of Y_GAMMA");
  clan_arg(ms, "gamma", a, "Orbit closure clan");
  ms->callback([&] {
    action = [&] {
      const Clan g = Clan::parse(a);
      const TableRow row{g, length(g), maxsing(g)};
      if (ctx.json) {
        ctx.emit(to_json(row));
      } else {
        for (const Clan& x : row.maxsing) out << x.str() << "\n";
      }
    };
  });

  auto* iso = app.add_subcommand("verify-iso", "Check the slice isomorphism for interval embeddings");
  clan_arg(iso, "theta", a, "Big upper clan");
  clan_arg(iso, "alpha", b, "Small lower clan");
  clan_arg(iso, "gamma", c, "Small upper clan");
  iso->add_option("--indices", indices_text, "One embedding, e.g. 2,3,4,5 (default: all)");
  iso->callback([&] {
    action = [&] {
      const Clan theta = Clan::parse(a), alpha = Clan::parse(b), gamma = Clan::parse(c);
      std::vector<IntervalEmbedding> es;
      if (indices_text.empty()) {
        es = find_interval_embeddings(theta, alpha, gamma);
      } else {
        const auto idx = parse_indices(indices_text);
        const Clan beta = phi(alpha, theta, idx);
        if (!interval_contains(alpha, gamma, beta, theta, idx)) {
          throw Error(ErrorCode::BadIndices, "{" + indices_text + "} is not an interval embedding");
        }
        es.push_back({alpha, gamma, beta, theta, idx, length(gamma) - length(alpha)});
      }
      Json list = Json::array();
      for (const auto& e : es) {
        const IsoVerification v = verify_interval_iso(e);
        if (ctx.json) {
          list.push_back(to_json(v));
        } else {
          out << "{" << join_indices(e.indices) << "} [" << e.beta.str() << ", " << e.theta.str()
              << "] dims=" << v.dims_equal << " deleted=" << v.deleted_vars_vanish
              << " generators=" << v.mapped_gens_in_radical << " verified=" << (v.verified() ? "true" : "false") << "\n";
        }
      }
      if (ctx.json) {
        ctx.emit({{"verifications", std::move(list)}});
      } else if (es.empty()) {
        out << "none\n";
      }
    };
  });

  auto* table = app.add_subcommand("table", "Singular clans with their maximal singular orbits");
  pq_args(table);
  table->callback([&] {
    action = [&] {
      if (p + q < 1) throw Error(ErrorCode::EmptyInput, "p + q must be positive");
      const auto rows = singularity_table(p, q);
      if (ctx.json) {
        Json list = Json::array();
        for (const auto& r : rows) list.push_back(to_json(r));
        ctx.emit({{"p", p}, {"q", q}, {"rows", std::move(list)}});
      } else {
        for (const auto& r : rows) out << format_tuple(r) << "\n";
      }
    };
  });

  auto* upper = app.add_subcommand("upper-ideal", "Check that singular pairs form an upper order ideal");
  pq_args(upper);
  upper->callback([&] {
    action = [&] {
      if (p + q < 1) throw Error(ErrorCode::EmptyInput, "p + q must be positive");
      const auto rep = upper_ideal_check(p, q, [](const Clan& al, const Clan& ga) { return !smooth_at(ga, al).smooth; });
      if (ctx.json) {
        ctx.emit(to_json(rep));
      } else {
        out << "pairs " << rep.pairs_checked << " downward " << rep.downward_checks << " embeddings "
            << rep.embeddings_checked << " violations " << rep.violations.size() << "\n";
        for (const auto& v : rep.violations) out << v << "\n";
      }
    };
  });

  auto* cas = app.add_subcommand("export-cas", "Macaulay2 script for the slice ideal");
  clan_arg(cas, "gamma", a, "Orbit closure clan");
  clan_arg(cas, "alpha", b, "Slice clan");
  cas->add_option("--checks", checks, "radical, dim, type, multiplicity or all")
      ->check(CLI::IsMember({"radical", "dim", "type", "multiplicity", "all"}))
      ->delimiter(',');
  cas->add_option("-o,--output", output_path, "Write to a file (extension .m2.txt)");
  cas->callback([&] {
    action = [&] {
      const auto script = emit_cas(generators(Clan::parse(a), Clan::parse(b)), parse_checks(checks));
      if (!output_path.empty()) {
        std::string path = output_path;
        if (!path.ends_with(kCasExtension)) path += kCasExtension;
        std::ofstream file(path);
        if (!file) throw Error(ErrorCode::BadIndices, "cannot write " + path);
        file << script.text;
        if (ctx.json) ctx.emit({{"dialect", script.dialect}, {"path", path}, {"checks", script.checks}});
        else out << path << "\n";
      } else if (ctx.json) {
        ctx.emit({{"dialect", script.dialect}, {"checks", script.checks}, {"text", script.text}});
      } else {
        out << script.text;
      }
    };
  });

  try {
    auto args = shield_clans(argc, argv);
    std::reverse(args.begin(), args.end());
    app.parse(args);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    action();
  } catch (const Error& e) {
    const std::string code(to_string(e.code()));
    std::string message = e.what();
    if (message.starts_with(code + ": ")) message.erase(0, code.size() + 2);
    if (ctx.json) out << Json{{"error", {{"code", code}, {"message", message}}}}.dump(2) << "\n";
    err << "error[" << code << "]: " << message << "\n";
    return 1;
  } catch (const std::exception& e) {
    if (ctx.json) out << Json{{"error", {{"code", "Internal"}, {"message", e.what()}}}}.dump(2) << "\n";
    err << "error[Internal]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace orbitslice
