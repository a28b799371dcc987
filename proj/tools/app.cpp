#include "app.hpp"

#include "problem.hpp"

#include "fsing/canonical.hpp"
#include "fsing/errors.hpp"
#include "fsing/frobroot.hpp"
#include "fsing/parser.hpp"
#include "fsing/testideal.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>

namespace fsing::cli {

namespace {

enum class Format { human, machine };

struct Options {
  Format format = Format::human;
  std::string ideal = "I";
  bool serial = false;
  bool timings = false;
  std::size_t max_iterations = 0;

  std::string file;
  unsigned e = 1;
  std::string u;
  std::string c;
  std::string canonical;
  bool gorenstein = false;
  std::uint64_t seed = 0;
  std::size_t delta = 0;
  std::string formula = "containing-I";
  bool compare = false;

  ChainLimits limits() const {
    ChainLimits l;
    if (max_iterations) l.max_iterations = max_iterations;
    return l;
  }
};

// Key/value report. Human form: "key: value", ideals as indented generator
// lists. Machine form: "key=value", ideals as key.count and key.i.
class Report {
 public:
  Report(Format format, std::ostream& out) : format_(format), out_(out) {}

  void value(const std::string& key, const std::string& v) {
    out_ << key << (format_ == Format::human ? ": " : "=") << v << '\n';
  }
  void value(const std::string& key, std::size_t v) { value(key, std::to_string(v)); }
  void flag(const std::string& key, bool v) { value(key, v ? "true" : "false"); }
  void poly(const std::string& key, const Polynomial& f) { value(key, to_string(f)); }

  void ideal(const std::string& key, const Ideal& I) {
    auto basis = sorted_basis(I);
    if (format_ == Format::machine) {
      value(key + ".count", basis.size());
      for (std::size_t i = 0; i < basis.size(); ++i) value(key + "." + std::to_string(i), to_string(basis[i]));
      return;
    }
    out_ << key << ":\n";
    if (basis.empty()) out_ << "  0\n";
    for (const auto& g : basis) out_ << "  " << to_string(g) << '\n';
  }

  // A lone ideal: bare generator lines in human form.
  void bare_ideal(const std::string& key, const Ideal& I) {
    if (format_ == Format::machine) return ideal(key, I);
    auto basis = sorted_basis(I);
    if (basis.empty()) out_ << "0\n";
    for (const auto& g : basis) out_ << to_string(g) << '\n';
  }

  void inline_ideal(const std::string& key, const Ideal& I) {
    if (format_ == Format::machine) return ideal(key, I);
    std::string text = "(";
    auto basis = sorted_basis(I);
    for (std::size_t i = 0; i < basis.size(); ++i) text += (i ? ", " : "") + to_string(basis[i]);
    value(key, basis.empty() ? "(0)" : text + ")");
  }

  void matrix(const std::string& key, const PolyMatrix& M) {
    value(key + (format_ == Format::human ? " rows" : ".rows"), M.rows());
    value(key + (format_ == Format::human ? " cols" : ".cols"), M.cols());
    for (std::size_t r = 0; r < M.rows(); ++r) {
      if (format_ == Format::machine) {
        for (std::size_t c = 0; c < M.cols(); ++c) {
          value(key + "." + std::to_string(r) + "." + std::to_string(c), to_string(M(r, c)));
        }
        continue;
      }
      out_ << "  [";
      for (std::size_t c = 0; c < M.cols(); ++c) out_ << (c ? ", " : "") << to_string(M(r, c));
      out_ << "]\n";
    }
  }

 private:
  Format format_;
  std::ostream& out_;
};

class CommandError : public InputError {
 public:
  using InputError::InputError;
};

Polynomial parse_flag(const std::string& flag, const std::string& text, const Ring& R) {
  try {
    return parse_polynomial(text, R);
  } catch (const InputError& e) {
    throw CommandError(flag + ": " + e.what());
  }
}

// std::nullopt inside: Gorenstein, J = (1).
std::optional<std::optional<Ideal>> canonical_choice(const Problem& pb, const Ideal& I, const Options& o) {
  if (o.gorenstein) return std::optional<Ideal>();
  if (!o.canonical.empty()) return std::optional<Ideal>(ideal_sum(pb.ideal(o.canonical), I));
  if (pb.canonical) return std::optional<Ideal>(ideal_sum(Ideal(pb.ring, *pb.canonical), I));
  return std::nullopt;
}

std::optional<Ideal> require_canonical(const Problem& pb, const Ideal& I, const Options& o) {
  auto choice = canonical_choice(pb, I, o);
  if (!choice) throw CommandError("no canonical ideal: add a [canonical] block, pass --canonical NAME or --gorenstein");
  return *choice;
}

Polynomial explicit_u(const Problem& pb, const Options& o) {
  if (!o.u.empty()) return parse_flag("--u", o.u, pb.ring);
  if (const Polynomial* u = pb.element("u")) return *u;
  throw CommandError("no u: pass --u or add an [element u] block");
}

Polynomial resolve_u(const Problem& pb, const Ideal& I, const Options& o) {
  if (!o.u.empty() || pb.element("u")) return explicit_u(pb, o);
  auto J = require_canonical(pb, I, o);
  return u_generator(I, J ? *J : Ideal::unit(pb.ring), {o.seed, 500});
}

void cmd_root(const Problem& pb, const Options& o, Report& out) {
  out.bare_ideal("root", frobenius_root(pb.ideal(o.ideal), o.e));
}

void cmd_star(const Problem& pb, const Options& o, Report& out) {
  out.bare_ideal("star", star_closure(pb.ideal(o.ideal), explicit_u(pb, o), o.e, o.limits()));
}

void cmd_gb(const Problem& pb, const Options& o, Report& out) { out.bare_ideal("gb", pb.ideal(o.ideal)); }

void cmd_dim(const Problem& pb, const Options& o, Report& out) {
  const Ideal& I = pb.ideal(o.ideal);
  auto dim = krull_dimension(I);
  if (!dim) {
    out.value("dim", "none (unit ideal)");
    return;
  }
  out.value("dim", *dim);
  out.value("codim", pb.ring.nvars() - *dim);
}

void cmd_fedder(const Problem& pb, const Options& o, Report& out) {
  const Ideal& I = pb.ideal(o.ideal);
  if (I.is_zero()) throw CommandError("the ideal has no generators");
  auto res = fedder_f_injective(I.generators());
  out.poly("u", res.u);
  out.flag("f_injective", res.f_injective);
}

void cmd_nilpotency(const Problem& pb, const Options& o, Report& out) {
  const Ideal& I = pb.ideal(o.ideal);
  Polynomial u = resolve_u(pb, I, o);
  NilpotencyOptions opts;
  opts.formula = o.formula == "root-of-sum" ? ChainFormula::root_of_sum : ChainFormula::smallest_containing_I;
  opts.compare_formulas = o.compare;
  opts.limits = o.limits();
  auto rep = nilpotency_analysis(FrobeniusPair(I, u), opts);
  out.poly("u", u);
  out.value("chain_length", rep.chain.size());
  for (std::size_t k = 0; k < rep.chain.size(); ++k) out.inline_ideal("J_" + std::to_string(k + 1), rep.chain[k]);
  out.value("eta", rep.eta);
  out.flag("torsion_free", rep.torsion_free);
  out.inline_ideal("nil_ideal", rep.nil_ideal);
  if (o.compare) {
    out.value("formulas_disagree_at", rep.formulas_disagree_at ? std::to_string(*rep.formulas_disagree_at) : "none");
  }
}

void cmd_ext(const Problem& pb, const Options& o, Report& out) {
  const Ideal& I = pb.ideal(o.ideal);
  const std::size_t codim = codimension(I);
  auto res = free_resolution(I, pb.ring.nvars() + 1);
  std::string betti = res.empty() ? "1" : std::to_string(res.front().differential.rows());
  for (const auto& step : res) betti += " " + std::to_string(step.differential.cols());
  out.value("betti", betti);
  out.value("length", res.size());
  out.value("codim", codim);
  const std::size_t delta = o.delta ? o.delta : codim;
  out.value("delta", delta);
  out.matrix("ext", ext_presentation(I, delta));
}

void cmd_test_ideal(const Problem& pb, const Options& o, Report& out, std::vector<StageTiming>& timings) {
  const Ideal& I = pb.ideal(o.ideal);
  auto J = require_canonical(pb, I, o);
  std::optional<Polynomial> c;
  if (!o.c.empty()) {
    c = parse_flag("--c", o.c, pb.ring);
  } else if (const Polynomial* given = pb.element("c")) {
    c = *given;
  }
  TestIdealOptions opts;
  opts.seed = o.seed;
  opts.limits = o.limits();
  auto rep = parameter_test_ideal(I, J, c, opts);
  timings = rep.timings;
  out.value("seed", std::to_string(rep.seed));
  out.value("canonical", J ? "given" : "gorenstein");
  out.value("resolution_length", rep.resolution_length);
  out.poly("u", rep.u);
  out.flag("torsion_free", rep.nilpotency.torsion_free);
  out.value("eta", rep.nilpotency.eta);
  out.poly("c", rep.c);
  out.value("c_source", rep.c_suggested ? "suggested" : "given");
  out.ideal("tau", rep.tau);
  out.flag("f_rational", rep.f_rational);
}

std::string stage_of(const std::string& command) { return command.empty() ? "fsing" : command; }

void print_timings(std::ostream& err, const std::vector<StageTiming>& timings) {
  for (const auto& t : timings) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3f", t.seconds);
    err << "timing " << t.stage << ": " << buf << " s\n";
  }
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool nested);

int execute(const std::string& command, const Options& o, std::ostream& out, std::ostream& err,
            bool nested) {
  std::optional<Problem> problem;
  try {
    problem = load_problem(o.file);
  } catch (const InputError& e) {
    err << "fsing: problem file " << o.file << ": " << e.what() << '\n';
    return exit_input;
  }

  if (command == "run") {
    if (nested) {
      err << "fsing: run: a [task] cannot itself be 'run'\n";
      return exit_input;
    }
    if (!problem->task) {
      err << "fsing: run: " << o.file << " has no [task] block\n";
      return exit_input;
    }
    std::vector<std::string> args{"--format", o.format == Format::human ? "human" : "machine", "--ideal", o.ideal};
    if (o.serial) args.push_back("--serial");
    if (o.timings) args.push_back("--timings");
    if (o.max_iterations) {
      args.push_back("--max-iterations");
      args.push_back(std::to_string(o.max_iterations));
    }
    auto task = split_command_line(*problem->task);
    args.insert(args.end(), task.begin(), task.end());
    args.push_back(o.file);
    return dispatch(args, out, err, true);
  }

  set_default_gb_strategy(o.serial ? GbStrategy::serial : GbStrategy::parallel);
  Report report(o.format, out);
  std::vector<StageTiming> timings;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Problem& pb = *problem;
    if (command == "root") cmd_root(pb, o, report);
    else if (command == "star") cmd_star(pb, o, report);
    else if (command == "nilpotency") cmd_nilpotency(pb, o, report);
    else if (command == "fedder") cmd_fedder(pb, o, report);
    else if (command == "ext") cmd_ext(pb, o, report);
    else if (command == "test-ideal") cmd_test_ideal(pb, o, report, timings);
    else if (command == "dim") cmd_dim(pb, o, report);
    else if (command == "gb") cmd_gb(pb, o, report);
  } catch (const PreconditionError& e) {
    err << "fsing: " << e.what() << '\n';
    return exit_precondition;
  } catch (const InputError& e) {
    err << "fsing: " << stage_of(command) << ": " << e.what() << '\n';
    return exit_input;
  } catch (const InternalError& e) {
    err << "fsing: " << stage_of(command) << ": internal error: " << e.what() << '\n';
    return exit_internal;
  }
  if (o.timings) {
    if (timings.empty()) {
      timings.push_back({command, std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count()});
    }
    print_timings(err, timings);
  }
  return exit_ok;
}

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err, bool nested) {
  Options o;
  CLI::App app{"Frobenius roots, star closures and parameter test ideals over F_p", "fsing"};
  app.require_subcommand(1);
  app.fallthrough();
  std::map<std::string, Format> formats{{"human", Format::human}, {"machine", Format::machine}};
  app.add_option("--format", o.format, "Report format")->transform(CLI::CheckedTransformer(formats));
  app.add_option("--ideal", o.ideal, "Name of the ideal block to use")->capture_default_str();
  app.add_flag("--serial", o.serial, "Use the serial Groebner kernel");
  app.add_flag("--timings", o.timings, "Print stage timings to stderr");
  app.add_option("--max-iterations", o.max_iterations, "Iteration cap for Frobenius chains (default 10 n p^e)")
      ->check(CLI::PositiveNumber);

  std::string command;
  auto sub = [&](const char* name, const char* help) {
    CLI::App* s = app.add_subcommand(name, help);
    s->add_option("file", o.file, "Problem file")->required();
    s->callback([&command, s] { command = s->get_name(); });
    return s;
  };
  auto add_e = [&](CLI::App* s) {
    s->add_option("--e", o.e, "Frobenius exponent e (q = p^e)")->check(CLI::PositiveNumber)->capture_default_str();
  };
  auto add_canonical = [&](CLI::App* s) {
    auto* can = s->add_option("--canonical", o.canonical, "Ideal block with the canonical ideal's generators");
    s->add_flag("--gorenstein", o.gorenstein, "R/I is Gorenstein: J = (1)")->excludes(can);
  };

  CLI::App* root = sub("root", "Frobenius root of the ideal");
  add_e(root);
  CLI::App* star = sub("star", "Star closure of the ideal under u");
  star->add_option("--u", o.u, "The element u (default: [element u])");
  add_e(star);
  CLI::App* nil = sub("nilpotency", "Frobenius chain, index of nilpotency and torsion-freeness");
  nil->add_option("--u", o.u, "The element u (default: [element u], else computed)");
  add_canonical(nil);
  nil->add_option("--formula", o.formula, "Chain formula")
      ->check(CLI::IsMember({"containing-I", "root-of-sum"}))
      ->capture_default_str();
  nil->add_flag("--compare", o.compare, "Also run the other chain formula and report differences");
  sub("fedder", "Fedder's criterion for a complete intersection");
  CLI::App* ext = sub("ext", "Free resolution and Ext presentation");
  ext->add_option("--delta", o.delta, "Ext index (default: the codimension)")->check(CLI::PositiveNumber);
  CLI::App* test = sub("test-ideal", "Parameter test ideal");
  add_canonical(test);
  test->add_option("--c", o.c, "Test element (default: [element c], else drawn)");
  test->add_option("--seed", o.seed, "Seed for random choices")->capture_default_str();
  sub("dim", "Krull dimension of R/I");
  sub("gb", "Reduced Groebner basis");
  sub("run", "Run the file's [task] line");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return exit_ok;
  } catch (const CLI::ParseError& e) {
    err << "fsing: arguments: " << e.what() << '\n';
    return exit_input;
  }
  return execute(command, o, out, err, nested);
}

}  // namespace

std::vector<Polynomial> sorted_basis(const Ideal& I) {
  std::vector<Polynomial> basis = I.groebner_basis().elements();
  const MonomialOrder& order = I.ring().order();
  std::sort(basis.begin(), basis.end(), [&](const Polynomial& a, const Polynomial& b) {
    Monomial la = a.leading_monomial();
    Monomial lb = b.leading_monomial();
    if (la.degree() != lb.degree()) return la.degree() < lb.degree();
    return compare_monomials(order, la, lb) > 0;
  });
  return basis;
}

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> words;
  std::string word;
  bool quoted = false;
  bool have = false;
  for (char ch : line) {
    if (ch == '"') {
      quoted = !quoted;
      have = true;
    } else if (!quoted && (ch == ' ' || ch == '\t')) {
      if (have) words.push_back(word);
      word.clear();
      have = false;
    } else {
      word += ch;
      have = true;
    }
  }
  if (quoted) throw InputError("unterminated quote in [task]");
  if (have) words.push_back(word);
  return words;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  try {
    return dispatch(args, out, err, false);
  } catch (const InputError& e) {
    err << "fsing: " << e.what() << '\n';
    return exit_input;
  } catch (const std::exception& e) {
    err << "fsing: internal error: " << e.what() << '\n';
    return exit_internal;
  }
}

}  // namespace fsing::cli
