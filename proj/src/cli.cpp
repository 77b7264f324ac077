#include "kirby/cli.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "kirby/acceptance.hpp"
#include "kirby/braidclasp.hpp"
#include "kirby/fourman.hpp"
#include "kirby/h4.hpp"
#include "kirby/homlink.hpp"
#include "kirby/figures.hpp"
#include "kirby/movecalc.hpp"
#include "kirby/pdcode.hpp"
#include "text_util.hpp"

namespace kirby {

namespace {

enum class Format { Plain, Machine };

struct Report {
  std::vector<std::string> lines;
  std::vector<std::pair<std::string, std::string>> keys;
  int code = kVerified;

  void line(std::string s) { lines.push_back(std::move(s)); }
  void block(const std::string& text) {
    std::istringstream in(text);
    for (std::string l; std::getline(in, l);) lines.push_back(l);
  }
  void key(std::string k, std::string v) { keys.emplace_back(std::move(k), std::move(v)); }
  void verdict(bool ok) {
    code = ok ? kVerified : kRefuted;
    key("result", ok ? "verified" : "refuted");
  }
};

class Inputs {
 public:
  explicit Inputs(std::istream& in) : in_(in) {}

  std::string text(const std::string& path) {
    if (path == "-") {
      if (stdin_used_) throw KirbyError("standard input can only be read once");
      stdin_used_ = true;
      std::ostringstream s;
      s << in_.rdbuf();
      return s.str();
    }
    std::ifstream f(path, std::ios::binary);
    if (!f) throw KirbyError("cannot read " + path);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  }

  IntegerMatrix matrix(const std::string& path) {
    std::istringstream in(text(path));
    std::string body;
    for (std::string l; std::getline(in, l);) {
      const auto first = l.find_first_not_of(" \t\r");
      if (first != std::string::npos && l[first] == '#') continue;
      body += l + '\n';
    }
    return parse_matrix(body);
  }

 private:
  std::istream& in_;
  bool stdin_used_ = false;
};

void write_payload(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw KirbyError("cannot write " + path);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::size_t to_index(const std::string& tok, const char* what) {
  return detail::to_count(detail::parse_integer(tok, what), what);
}

int to_sign(const std::string& tok) {
  const Integer v = detail::parse_integer(tok, "sign");
  if (v != 1 && v != -1) throw KirbyError("sign must be +1 or -1, got " + tok);
  return static_cast<int>(v.get_si());
}

// apply-move grammar; each move consumes its own arguments, `,` separates moves.
HomFramedLink apply_moves(HomFramedLink l, const std::vector<std::string>& tokens, Inputs& inputs, Report& rep) {
  std::size_t k = 0;
  auto next = [&](const char* what) -> const std::string& {
    if (k >= tokens.size()) throw KirbyError(std::string("missing ") + what);
    return tokens[k++];
  };
  auto shadow = [&]() { return parse_embedding_shadow(inputs.text(next("shadow file"))); };
  if (tokens.empty()) throw KirbyError("no move given");
  while (k < tokens.size()) {
    const std::string move = next("move name");
    if (move == ",") continue;
    if (move == "stabilize") {
      l = stabilize(l, to_sign(next("sign")));
    } else if (move == "destabilize") {
      l = destabilize(l, to_index(next("component"), "component"));
    } else if (move == "slide") {
      const auto i = to_index(next("component"), "component");
      const auto j = to_index(next("component"), "component");
      l = handle_slide(l, i, j, to_sign(next("sign")));
    } else if (move == "band-slide") {
      const auto i = to_index(next("component"), "component");
      const auto j = to_index(next("component"), "component");
      l = handle_slide(handle_slide(l, i, j, 1), i, j, -1);
    } else if (move == "k3-add") {
      const Integer framing = detail::parse_integer(next("framing"), "framing");
      std::vector<Integer> row;
      for (std::size_t c = 0; c < l.n(); ++c) row.push_back(detail::parse_integer(next("linking number"), "linking number"));
      l = k3_add(l, framing, row);
    } else if (move == "k3-remove" || move == "pair-remove") {
      const auto i = to_index(next("component"), "component");
      const auto j = to_index(next("component"), "component");
      l = move == "k3-remove" ? k3_remove(l, i, j) : pair_remove(l, i, j);
    } else if (move == "pair-add") {
      l = pair_add(l);
    } else if (move == "ihx-add") {
      l = ihx_add(l, shadow());
    } else if (move == "ihx-adm-add") {
      l = admissible_ihx_add(l, shadow());
    } else if (move == "lantern-k-to-kprime" || move == "lantern-kprime-to-k") {
      const bool forward = move == "lantern-k-to-kprime";
      const auto sh = shadow();
      std::vector<std::size_t> block;
      for (std::size_t c = 0; c < (forward ? 4u : 3u); ++c) block.push_back(to_index(next("component"), "component"));
      l = lantern_swap(l, block, sh, forward ? LanternDirection::KToKPrime : LanternDirection::KPrimeToK);
    } else {
      throw KirbyError("unknown move '" + move + "'");
    }
    rep.line("applied " + move + ": n = " + std::to_string(l.n()));
  }
  return l;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homological Kirby calculus: move sequences, framed-link shadows and certificates", "kirbycalc"};
  app.require_subcommand(1);
  app.fallthrough();
  bool quiet = false;
  Format format = Format::Plain;
  app.add_flag("-q,--quiet", quiet, "Print nothing; only the exit code reports the result");
  app.add_option("--format", format, "plain: readable lines then ## key=value; machine: only ## lines")
      ->transform(CLI::CheckedTransformer(std::map<std::string, Format>{{"plain", Format::Plain}, {"machine", Format::Machine}}));

  Inputs inputs(in);
  std::function<Report()> action;

  // Shared argument slots; each subcommand binds only what it uses.
  std::string file_a;
  std::string file_b;
  std::string output;
  std::size_t p = 2;
  std::size_t q = 2;
  std::size_t max_len = 8;
  long cap = 64;
  std::string gens = "wall";
  int sign = kIhxEtaSign;
  std::optional<std::size_t> strands;
  std::string data_dir = default_data_dir();
  unsigned jobs = 1;
  std::vector<std::string> move_tokens;

  auto file_arg = [](CLI::App* sub, std::string& slot, const char* name, const char* desc) {
    sub->add_option(name, slot, desc)->required();
  };

  {
    auto* sub = app.add_subcommand("phi", "Matrix phi(S) of a move sequence");
    file_arg(sub, file_a, "sequence", "Move sequence file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto s = parse_move_sequence(inputs.text(file_a));
        const auto m = phi(s);
        r.block(format_matrix(m));
        r.key("n", std::to_string(s.n()));
        r.key("moves", std::to_string(s.size()));
        r.key("phi", format_matrix_inline(m));
        r.key("det", determinant(m).get_str());
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("evolve-lk", "Linking matrix after a move sequence");
    file_arg(sub, file_a, "lk", "Symmetric linking matrix file");
    file_arg(sub, file_b, "sequence", "Move sequence file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto lk = inputs.matrix(file_a);
        const auto s = parse_move_sequence(inputs.text(file_b));
        const auto e = evolve_lk(lk, s);
        r.block(format_matrix(e));
        r.key("lk", format_matrix_inline(e));
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("band-slide-check", "Whether phi(S) is the identity");
    file_arg(sub, file_a, "sequence", "Move sequence file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto s = parse_move_sequence(inputs.text(file_a));
        const bool ok = is_band_slide_realizable(s);
        r.line(ok ? "phi(S) = I: the ends are related by band-slides"
                  : "phi(S) != I: " + format_matrix_inline(phi(s)));
        r.verdict(ok);
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("opq-check", "Whether T I_{p,q} T^t = I_{p,q}");
    sub->add_option("-p", p, "Positive part")->required();
    sub->add_option("-q", q, "Negative part")->required();
    file_arg(sub, file_a, "matrix", "Matrix file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto t = inputs.matrix(file_a);
        if (t.rows() != p + q || t.cols() != p + q) throw KirbyError("matrix size does not match p + q");
        const bool ok = is_in_opq(t, {p, q});
        r.line(std::string(ok ? "in" : "not in") + " O(" + std::to_string(p) + "," + std::to_string(q) + ";Z)");
        if (!ok) r.line("T I T^t = " + format_matrix_inline(t * ipq({p, q}) * t.transpose()));
        r.verdict(ok);
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("opq-decompose", "Shortest word over a generating set for an element of O(p,q;Z)");
    sub->add_option("-p", p, "Positive part")->required();
    sub->add_option("-q", q, "Negative part")->required();
    sub->add_option("--max-len", max_len, "Longest word searched")->capture_default_str();
    sub->add_option("--cap", cap, "Largest entry allowed in intermediate products")->capture_default_str();
    sub->add_option("--gens", gens, "Generating set")->check(CLI::IsMember({"wall", "slides"}))->capture_default_str();
    file_arg(sub, file_a, "matrix", "Matrix file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto t = inputs.matrix(file_a);
        const SignatureType sig{p, q};
        if (t.rows() != sig.size() || t.cols() != sig.size()) throw KirbyError("matrix size does not match p + q");
        if (!is_in_opq(t, sig)) {
          r.line("not in O(p,q;Z); nothing to decompose");
          r.verdict(false);
          return r;
        }
        const auto g = gens == "wall" ? close_under_inverses(wall_generators(sig)) : slide_generators(sig.size());
        const auto w = bfs_decompose_opq(t, sig, g, SearchLimits{max_len, cap});
        if (!w) {
          r.line("not found within bound (max length " + std::to_string(max_len) + ")");
          r.verdict(false);
          return r;
        }
        std::string names;
        for (auto k : *w) names += (names.empty() ? "" : ", ") + g[k].name;
        r.line("length " + std::to_string(w->size()) + ", applied in order: " + names);
        r.key("length", std::to_string(w->size()));
        r.key("word", names);
        r.verdict(evaluate_word(*w, g, sig.size()) == t);
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("verify-d22", "Check the eight-slide word against D_{2,2}");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto f = verify_d22();
        r.line("word product: " + format_matrix_inline(f.word_product));
        r.line("equals D_{2,2}: " + yes_no(f.word_matches_d22) + ", in O(2,2;Z): " + yes_no(f.word_in_opq));
        r.line("matrix with (1,1) = -1: in O(2,2;Z): " + yes_no(f.variant_in_opq) +
               ", T I T^t = " + format_matrix_inline(f.variant_form));
        r.key("d22", format_matrix_inline(f.word_product));
        r.key("variant_in_opq", yes_no(f.variant_in_opq));
        r.verdict(f.word_matches_d22 && f.word_in_opq);
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("snf", "Smith normal form U A V = S");
    file_arg(sub, file_a, "matrix", "Matrix file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto a = inputs.matrix(file_a);
        const auto d = smith_normal_form(a);
        r.line("U =");
        r.block(format_matrix(d.u));
        r.line("S =");
        r.block(format_matrix(d.s));
        r.line("V =");
        r.block(format_matrix(d.v));
        std::string f;
        for (const auto& x : d.invariant_factors()) f += (f.empty() ? "" : " ") + x.get_str();
        r.key("invariant_factors", f);
        r.key("cokernel", cokernel(a).to_string());
        r.verdict(d.verify(a));
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("coker", "Cokernel Z^rows / A Z^cols");
    file_arg(sub, file_a, "matrix", "Matrix file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto g = cokernel(inputs.matrix(file_a));
        r.line(g.to_string());
        r.key("group", g.to_string());
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("h1-surgery", "H_1 of the surgered 3-manifold");
    file_arg(sub, file_a, "link", "homlink file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto l = parse_hom_link(inputs.text(file_a));
        const auto g = h1_of_surgery(l);
        r.line("H_1 = " + g.to_string());
        r.line("Z-null: " + yes_no(is_z_null(l)) + ", admissible: " + yes_no(is_admissible(l)));
        r.key("h1", g.to_string());
        r.key("z_null", yes_no(is_z_null(l)));
        r.key("admissible", yes_no(is_admissible(l)));
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("apply-move", "Apply moves to a framed-link shadow");
    file_arg(sub, file_a, "link", "homlink file");
    sub->add_option("moves", move_tokens, "Moves and their arguments, separated by ','")->required();
    sub->add_option("-o,--output", output, "Write the resulting link to this file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto before = parse_hom_link(inputs.text(file_a));
        const auto after = apply_moves(before, move_tokens, inputs, r);
        const std::string text = format_hom_link(after);
        if (output.empty()) {
          r.block(text);
        } else {
          write_payload(output, text);
        }
        const bool same = h1_of_surgery(before) == h1_of_surgery(after);
        r.key("n", std::to_string(after.n()));
        r.key("h1", h1_of_surgery(after).to_string());
        r.key("h1_preserved", yes_no(same));
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("eta-ihx", "Class of an IHX-move in H_4(Z^r)");
    file_arg(sub, file_a, "shadow", "Embedding shadow with g = 4");
    sub->add_option("--sign", sign, "Orientation constant")->check(CLI::IsMember({-1, 1}))->capture_default_str();
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto e = eta_of_ihx(parse_embedding_shadow(inputs.text(file_a)), sign);
        r.block(format_wedge4(e));
        r.key("zero", yes_no(e.is_zero()));
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("plan-cancel", "IHX-moves whose classes cancel a target in H_4(Z^r)");
    file_arg(sub, file_a, "target", "wedge4 file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto target = parse_wedge4(inputs.text(file_a));
        const auto plan = plan_cancellation(target);
        for (std::size_t k = 0; k < plan.size(); ++k) {
          r.line("# move " + std::to_string(k + 1) + " sign " + (plan[k].sign > 0 ? "+1" : "-1"));
          r.block(format_embedding_shadow(plan[k].shadow));
        }
        r.key("moves", std::to_string(plan.size()));
        r.verdict((plan_total(plan, target.r()) + target).is_zero());
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("braid-trivial", "Whether a braid acts trivially on the free group");
    file_arg(sub, file_a, "braid", "braid file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto b = parse_braid_word(inputs.text(file_a));
        const bool ok = braid_is_trivial(b);
        r.line(ok ? "trivial" : "nontrivial");
        r.key("length", std::to_string(b.length()));
        r.key("pure", yes_no(is_pure(b)));
        r.verdict(ok);
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("verify-witt-hall", "Check the Witt-Hall identity under both conjugation conventions");
    sub->callback([&] {
      action = [&] {
        Report r;
        const bool left = verify_witt_hall(Conjugation::InverseLeft);
        const bool right = verify_witt_hall(Conjugation::InverseRight);
        r.line(std::string("a^g = g^-1 a g: ") + (left ? "holds" : "fails"));
        r.line(std::string("a^g = g a g^-1: ") + (right ? "holds" : "fails"));
        r.key("inverse_left", yes_no(left));
        r.key("inverse_right", yes_no(right));
        r.verdict(left != right && verify_witt_hall(kWittHallConvention));
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("verify-ihx-braid", "Check beta1 (alpha^2 beta1 alpha^-2) (alpha beta1 alpha^-1) = 1");
    file_arg(sub, file_a, "beta1", "braid file");
    file_arg(sub, file_b, "alpha", "braid file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto beta1 = parse_braid_word(inputs.text(file_a));
        const auto alpha = parse_braid_word(inputs.text(file_b));
        const bool ok = verify_ihx_braid_identity(beta1, alpha);
        r.line(ok ? "product is the trivial braid" : "product is not trivial");
        r.verdict(ok);
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("kirby-homology", "Homology of a closed 4-manifold from a Kirby skeleton");
    file_arg(sub, file_a, "skeleton", "kirby4 file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto sk = parse_kirby_skeleton(inputs.text(file_a));
        const auto h = closed4_homology(sk);
        for (std::size_t k = 0; k < h.size(); ++k) {
          r.line("H_" + std::to_string(k) + " = " + h[k].to_string());
          r.key("h" + std::to_string(k), h[k].to_string());
        }
        r.key("euler", std::to_string(sk.euler_characteristic()));
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("pd-lk", "Linking matrix of a planar diagram, or its curve system");
    file_arg(sub, file_a, "diagram", "pd file");
    sub->add_option("--strands", strands, "Leading components that are dotted circles; prints a curve system");
    sub->add_option("-o,--output", output, "Write the result to this file");
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto pd = parse_planar_diagram(inputs.text(file_a));
        const std::string text =
            strands ? format_curve_system(curve_system_from_pd(pd, *strands)) : format_matrix(linking_matrix_from_pd(pd));
        if (output.empty()) {
          r.block(text);
        } else {
          write_payload(output, text);
        }
        r.key("components", std::to_string(pd.components()));
        r.key("crossings", std::to_string(pd.crossings().size()));
        return r;
      };
    });
  }
  {
    auto* sub = app.add_subcommand("verify-all", "Run every acceptance check");
    sub->add_option("--data-dir", data_dir, "Data directory")->capture_default_str();
    sub->add_option("--jobs", jobs, "Checks run concurrently")->check(CLI::PositiveNumber)->capture_default_str();
    sub->callback([&] {
      action = [&] {
        Report r;
        const auto results = run_acceptance({data_dir, jobs});
        std::size_t passed = 0;
        for (const auto& c : results) {
          r.line(format_result_line(c));
          r.key("criterion" + std::to_string(c.id), c.passed() ? "pass" : "fail");
          if (c.passed()) ++passed;
        }
        r.line(std::to_string(passed) + "/" + std::to_string(results.size()) + " criteria passed");
        r.key("passed", std::to_string(passed) + "/" + std::to_string(results.size()));
        r.verdict(passed == results.size());
        return r;
      };
    });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kVerified;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kVerified;
  } catch (const CLI::ParseError& e) {
    err << "kirbycalc: " << e.what() << '\n';
    return kInputError;
  }

  Report rep;
  try {
    rep = action();
  } catch (const std::exception& e) {
    if (!quiet) err << "kirbycalc: " << e.what() << '\n';
    return kInputError;
  }
  if (quiet) return rep.code;
  if (format == Format::Plain)
    for (const auto& l : rep.lines) out << l << '\n';
  for (const auto& [k, v] : rep.keys) out << "## " << k << '=' << v << '\n';
  return rep.code;
}

}  // namespace kirby
