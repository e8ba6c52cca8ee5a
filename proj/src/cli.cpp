#include "scx/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <future>
#include <sstream>

#include "json_internal.hpp"
#include "scx/equivariant.hpp"
#include "scx/error.hpp"
#include "scx/knots.hpp"

namespace scx {

namespace {

using detail::json;

// Raised for refused computations and failed checks.
struct ValidationFailure : Error {
  using Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << text << "\n";
  if (!out) throw ParseError("write failed for " + path);
}

Ring parse_ring_option(const std::string& s, long long p = 0) {
  if (s == "universal") return Ring::universal(p > 0 ? p : 1);
  return Ring::parse(s);
}

// Target ring left after fixing the listed variables to constants.
Ring specialized_ring(const Ring& r, const std::string& spec) {
  bool u = spec.find("U=") != std::string::npos;
  bool t = spec.find("T=") != std::string::npos;
  if (r.tag() == Ring::Tag::R_UNIVERSAL) {
    if (u && t) return Ring::Z();
    if (u) return Ring::ZT();
    throw ParseError("--specialize on " + r.name() + " must fix U");
  }
  if (t && r.num_t() == 1 && !r.has_x()) {
    if (r.tag() == Ring::Tag::Z_LAURENT_T) return Ring::Z();
    return r.coeff() == Coeff::GF2 ? Ring::F2() : Ring::Q();
  }
  throw ParseError("give --ring for the specialization " + spec);
}

struct Common {
  std::vector<std::string> in;
  std::string out, ring, specialize;
  bool json_out = false;
};

SComplex load(const Common& c, std::size_t k = 0) {
  if (c.in.size() <= k) throw ParseError("missing --in");
  SComplex C = deserialize(read_file(c.in[k]));
  if (!c.specialize.empty() || !c.ring.empty()) {
    Ring target = !c.ring.empty() ? parse_ring_option(c.ring) : specialized_ring(C.ring, c.specialize);
    C = base_change_complex(C, target, parse_varmap(target, c.specialize));
  }
  return C;
}

void emit_complex(const Common& c, const SComplex& C, std::ostream& out) {
  std::string text = serialize(C);
  if (!c.out.empty()) write_file(c.out, text);
  else out << text << "\n";
}

void emit_scalar(const Common& c, std::ostream& out, const std::string& key, const json& value) {
  if (c.json_out) {
    json j;
    j[key] = value;
    out << j.dump(2) << "\n";
  } else {
    out << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
  }
}

void emit_report(const Common& c, const ValidationReport& rep, std::ostream& out) {
  if (c.json_out) {
    json j;
    j["ok"] = rep.ok();
    json issues = json::array();
    for (auto& i : rep.issues) issues.push_back({{"relation", i.relation}, {"detail", i.detail}});
    j["issues"] = issues;
    out << j.dump(2) << "\n";
  } else {
    if (rep.ok()) out << "ok\n";
    for (auto& i : rep.issues) out << i.relation << "\t" << i.detail << "\n";
  }
  if (!rep.ok()) throw ValidationFailure("");
}

void emit_ranks(const Common& c, const std::array<std::size_t, 4>& r, std::ostream& out) {
  std::size_t total = r[0] + r[1] + r[2] + r[3];
  if (c.json_out) {
    json j;
    j["graded_ranks"] = r;
    j["total"] = total;
    out << j.dump(2) << "\n";
    return;
  }
  out << "grading\trank\n";
  for (int g = 0; g < 4; ++g) out << g << "\t" << r[g] << "\n";
  out << "total\t" << total << "\n";
}

std::string deg_str(const std::optional<Rational>& r) { return r ? r->str(true) : "-"; }

int run_batch(const std::string& file, std::ostream& out, std::ostream& err);

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"S-complex invariants of knots", "scx"};
  std::string batch;
  app.add_option("--batch", batch, "run one command per line");
  app.require_subcommand(0, 1);

  Common c;
  auto common = [&](CLI::App* s, bool input) {
    if (input) s->add_option("--in", c.in, "input complex (JSON)")->required();
    s->add_option("--out", c.out, "output file");
    s->add_option("--ring", c.ring, "target ring");
    s->add_option("--specialize", c.specialize, "variable assignment, e.g. U=1,T=x");
    s->add_flag("--json", c.json_out, "JSON output");
  };

  long long p = 0, q = 0;
  bool allow_inconsistent = false, twisted = false;
  std::string name, route = "cycles";
  int k = 0, from = -2, to = 3;
  int N = 5;
  if (const char* env = std::getenv("SCX_TRUNCATION")) {
    try {
      N = std::stoi(env);
    } catch (...) {
      throw ParseError("SCX_TRUNCATION must be an integer");
    }
  }

  auto* tb = app.add_subcommand("two-bridge", "two-bridge knot complex");
  tb->add_option("--p", p)->required();
  tb->add_option("--q", q)->required();
  tb->add_flag("--allow-inconsistent", allow_inconsistent);
  common(tb, false);
  auto* lens = app.add_subcommand("lens", "Sasahira homology of L(p,q)");
  lens->add_option("--p", p)->required();
  lens->add_option("--q", q)->required();
  common(lens, false);
  auto* torus = app.add_subcommand("torus", "torus knot signature and Alexander polynomial");
  torus->add_option("--p", p)->required();
  torus->add_option("--q", q)->required();
  common(torus, false);
  auto* fix = app.add_subcommand("fixture", "stored complexes");
  fix->add_option("--name", name)->required();
  common(fix, false);
  auto* val = app.add_subcommand("validate", "check the relations");
  common(val, true);
  auto* ten = app.add_subcommand("tensor", "tensor product of two complexes (--in twice)");
  common(ten, true);
  auto* du = app.add_subcommand("dual", "dual complex");
  common(du, true);
  auto* h = app.add_subcommand("h", "h-invariant");
  h->add_option("--route", route)->check(CLI::IsMember({"cycles", "image"}));
  common(h, true);
  auto* jid = app.add_subcommand("jideals", "ideal sequence");
  jid->add_option("--from", from);
  jid->add_option("--to", to);
  common(jid, true);
  auto* gam = app.add_subcommand("gamma", "Gamma function");
  gam->add_option("--from", from);
  gam->add_option("--to", to);
  gam->add_option("--k", k);
  common(gam, true);
  auto* eul = app.add_subcommand("euler", "Euler characteristic");
  common(eul, true);
  auto* sh = app.add_subcommand("sharp", "homology of the unreduced complex");
  sh->add_flag("--twisted", twisted);
  common(sh, true);
  auto* hp = app.add_subcommand("hat-presentation", "presentation of the hat homology");
  common(hp, true);
  auto* bp = app.add_subcommand("bn-presentation", "base change of the hat presentation to S_BN");
  common(bp, true);
  auto* mc = app.add_subcommand("model-check", "small/large model equivalence on a truncation");
  mc->add_option("--N", N);
  common(mc, true);

  std::vector<const char*> argv{"scx"};
  for (auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 1;
  }
  if (!batch.empty()) return run_batch(batch, out, err);
  if (app.get_subcommands().empty()) {
    err << "no verb given\n";
    return 1;
  }

  if (tb->parsed()) {
    Ring r = parse_ring_option(c.ring.empty() ? "universal" : c.ring, p);
    auto rep = two_bridge(p, q, r);
    const std::string knot = "K(" + std::to_string(rep.p) + "," + std::to_string(rep.q) + ")";
    if (!c.out.empty()) write_file(c.out, serialize(rep.complex));
    if (c.json_out) {
      json j;
      j["knot"] = knot;
      j["p"] = rep.p;
      j["q"] = rep.q;
      j["q_input"] = rep.q_input;
      j["consistent"] = rep.consistent;
      j["signs_solved"] = rep.signs_solved;
      j["v_trusted"] = rep.complex.v_trusted;
      j["euler"] = euler_characteristic(rep.complex);
      json certs = json::array();
      for (auto& ct : rep.certificates)
        certs.push_back({{"i", ct.i}, {"j", ct.j}, {"k1", ct.k1}, {"k2", ct.k2}, {"e1", ct.e1}, {"e2", ct.e2}});
      j["certificates"] = certs;
      j["notes"] = rep.notes;
      j["complex"] = detail::to_json(rep.complex);
      out << j.dump(2) << "\n";
    } else {
      out << "knot\tgenerator\tgr_mod4\tdeg_I\n";
      for (auto& g : rep.complex.gens) out << knot << "\t" << g.name << "\t" << g.gr << "\t" << deg_str(g.deg_I) << "\n";
      out << "euler\t" << euler_characteristic(rep.complex) << "\n";
      out << "consistent\t" << (rep.consistent ? "true" : "false") << "\n";
      out << "v_trusted\t" << (rep.complex.v_trusted ? "true" : "false") << "\n";
      for (auto& n : rep.notes) out << "note\t" << n << "\n";
    }
    if (!rep.consistent && !allow_inconsistent) {
      err << knot << ": inconsistent complex (delta2 delta1 != 0); pass --allow-inconsistent to accept\n";
      return 2;
    }
    return 0;
  }
  if (lens->parsed()) {
    emit_ranks(c, lens_sasahira(p, q), out);
    return 0;
  }
  if (torus->parsed()) {
    long long s = torus_signature(p, q);
    auto a = torus_alexander(p, q);
    bool van = vanishing_check(p, q);
    if (c.json_out) {
      json j;
      j["p"] = p;
      j["q"] = q;
      j["signature"] = s;
      j["alexander"] = a.delta.str();
      j["alexander_abs"] = a.abs_sum;
      j["vanishing"] = van;
      out << j.dump(2) << "\n";
    } else {
      out << "p\tq\tsigma\talexander_abs\tvanishing\n";
      out << p << "\t" << q << "\t" << s << "\t" << a.abs_sum << "\t" << (van ? "true" : "false") << "\n";
      out << "alexander\t" << a.delta.str() << "\n";
    }
    return 0;
  }
  if (fix->parsed()) {
    emit_complex(c, fixture(name), out);
    return 0;
  }
  if (val->parsed()) {
    emit_report(c, validate(load(c)), out);
    return 0;
  }
  if (ten->parsed()) {
    if (c.in.size() != 2) throw ParseError("tensor needs --in twice");
    emit_complex(c, tensor(load(c, 0), load(c, 1)), out);
    return 0;
  }
  if (du->parsed()) {
    emit_complex(c, dual(load(c)), out);
    return 0;
  }
  if (h->parsed()) {
    SComplex C = load(c);
    emit_scalar(c, out, "h", route == "image" ? h_invariant_via_image(C) : h_invariant(C));
    return 0;
  }
  if (jid->parsed()) {
    auto J = j_ideals(load(c), from, to);
    if (c.json_out) {
      json j = json::object();
      for (auto& [i, I] : J) {
        json g = json::array();
        for (auto& x : I.gens) g.push_back(x.str());
        j[std::to_string(i)] = g;
      }
      out << j.dump(2) << "\n";
    } else {
      out << "i\tideal\n";
      for (auto& [i, I] : J) out << i << "\t" << I.str() << "\n";
    }
    return 0;
  }
  if (gam->parsed()) {
    SComplex C = load(c);
    if (gam->count("--k")) from = to = k;
    json j = json::object();
    if (!c.json_out) out << "k\tgamma\n";
    for (int i = from; i <= to; ++i) {
      auto g = gamma(C, i);
      if (c.json_out) j[std::to_string(i)] = g.infinite ? "inf" : g.value.str(true);
      else out << i << "\t" << g.str() << "\n";
    }
    if (c.json_out) out << j.dump(2) << "\n";
    return 0;
  }
  if (eul->parsed()) {
    emit_scalar(c, out, "euler", euler_characteristic(load(c)));
    return 0;
  }
  if (sh->parsed()) {
    emit_ranks(c, graded_ranks(sharp_complex(load(c), twisted)), out);
    return 0;
  }
  if (hp->parsed() || bp->parsed()) {
    const std::string text = read_file(c.in.at(0));
    ModulePresentation pres;
    if (bp->parsed() && json::parse(text, nullptr, false).contains("relations")) {
      pres = deserialize_presentation(text);
    } else {
      pres = hat_presentation(load(c));
    }
    if (bp->parsed()) pres = bn_presentation(pres);
    std::string s = serialize(pres);
    if (!c.out.empty()) write_file(c.out, s);
    else out << s << "\n";
    return 0;
  }
  if (mc->parsed()) {
    SComplex C = load(c);
    ValidationReport rep = verify_model_equivalence(C, N);
    for (auto& i : check_small_models(small_models(C, N, -N)).issues) rep.issues.push_back(i);
    if (v_nilpotent(C))
      for (auto& i : verify_triangle_exactness(C, N).issues) rep.issues.push_back(i);
    emit_report(c, rep, out);
    return 0;
  }
  err << "no verb given\n";
  return 1;
}

std::vector<std::string> split_words(const std::string& line) {
  std::vector<std::string> w;
  std::istringstream in(line);
  std::string s;
  while (in >> s) w.push_back(s);
  return w;
}

int run_batch(const std::string& file, std::ostream& out, std::ostream& err) {
  std::istringstream lines(read_file(file));
  std::vector<std::string> cmds;
  for (std::string line; std::getline(lines, line);) {
    auto w = split_words(line);
    if (w.empty() || w[0][0] == '#') continue;
    if (w[0] == "--batch") throw ParseError("nested --batch");
    cmds.push_back(line);
  }
  struct Result {
    int status;
    std::string out, err;
  };
  std::vector<std::future<Result>> jobs;
  for (auto& line : cmds)
    jobs.push_back(std::async(std::launch::async, [line] {
      std::ostringstream o, e;
      int s = run(split_words(line), o, e);
      return Result{s, o.str(), e.str()};
    }));
  int worst = 0;
  for (std::size_t i = 0; i < jobs.size(); ++i) {
    Result r = jobs[i].get();
    out << "## " << cmds[i] << "\n" << r.out;
    if (!r.err.empty()) err << "## " << cmds[i] << "\n" << r.err;
    out << "## status " << r.status << "\n";
    worst = std::max(worst, r.status);
  }
  return worst;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const ValidationFailure&) {
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedRing& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const RingMismatch& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace scx
