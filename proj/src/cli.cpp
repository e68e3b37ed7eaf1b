#include "tomo/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "tomo/bounds.hpp"
#include "tomo/errors.hpp"
#include "tomo/families.hpp"
#include "tomo/formats.hpp"
#include "tomo/oracle.hpp"
#include "tomo/staircase.hpp"

namespace tomo {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open " + path + " for writing");
  out << text;
  if (!out) throw std::invalid_argument("failed writing " + path);
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
  } else {
    write_file(out_path, text);
  }
}

bool parse_box(const std::string& text, oracle::Box& box) {
  const std::size_t x = text.find('x');
  if (x == std::string::npos || x == 0 || x + 1 >= text.size()) return false;
  try {
    box.rows = std::stoi(text.substr(0, x));
    box.cols = std::stoi(text.substr(x + 1));
  } catch (const std::exception&) {
    return false;
  }
  return box.rows >= 1 && box.cols >= 1;
}

struct GenOptions {
  families::FamilySpec spec;
  std::string out_path;
};

int cmd_gen(const GenOptions& opt, std::ostream& out) {
  const InstancePair pair = families::generate(opt.spec);
  emit(io::render_pair(pair.original(), pair.reconstruction()), opt.out_path, out);
  return kExitOk;
}

int cmd_analyze(const std::string& in_path, std::ostream& out, std::ostream& err) {
  const InstancePair raw = io::parse_pair(read_file(in_path));
  if (raw.original().empty()) {
    err << "F1 empty\n";
    return kExitUsage;
  }
  const Canonicalized canon = canonicalize(raw.original(), raw.reconstruction());
  const InstancePair& pair = canon.pair;
  const bool unique = is_canonical_unique(pair.original());
  out << io::render_metrics_block(pair.metrics(), unique);
  if (!unique) return kExitNotUnique;
  const bounds::BoundReport rep = bounds::report(pair);
  out << io::render_bound_report(rep);
  return rep.all_hold() ? kExitOk : kExitBoundViolation;
}

struct DecomposeOptions {
  std::string in_path;
  std::string cert_path;
  bool do_equalize = false;
};

int cmd_decompose(const DecomposeOptions& opt, std::ostream& out, std::ostream& err) {
  const InstancePair raw = io::parse_pair(read_file(opt.in_path));
  if (raw.original().empty()) {
    err << "F1 empty\n";
    return kExitUsage;
  }
  const Canonicalized canon = canonicalize(raw.original(), raw.reconstruction());
  InstancePair pair = canon.pair;
  if (!is_canonical_unique(pair.original())) {
    err << "F1 is not uniquely determined\n";
    return kExitNotUnique;
  }
  if (pair.original().size() != pair.reconstruction().size()) {
    if (!opt.do_equalize) {
      err << "sizes differ (" << pair.original().size() << " vs "
          << pair.reconstruction().size() << "); rerun with --equalize\n";
      return kExitSizeMismatch;
    }
    pair = equalize(pair);
  }
  const Decomposition d = decompose(pair);
  const std::string cert = io::render_certificate(pair, d.staircases);
  io::verify_certificate(pair, io::parse_certificate(cert));
  if (opt.cert_path.empty()) {
    out << cert;
  } else {
    write_file(opt.cert_path, cert);
    out << "staircases " << d.staircases.size() << "\n";
  }
  return kExitOk;
}

struct VerifyOptions {
  oracle::EnumSpec spec;
  std::string counterexample_path = "counterexample.pair";
};

int cmd_verify(const VerifyOptions& opt, std::ostream& out) {
  const oracle::VerificationSummary summary = oracle::verify_all(opt.spec);
  out << io::render_summary(summary);
  if (summary.first_violation) {
    write_file(opt.counterexample_path,
               io::render_pair(summary.first_violation->original,
                               summary.first_violation->reconstruction));
    out << "counterexample " << opt.counterexample_path << "\n";
  }
  return summary.violations == 0 ? kExitOk : kExitBoundViolation;
}

struct RenderOptions {
  std::string in_path;
  std::string format = "ascii";
  std::string out_path;
};

int cmd_render(const RenderOptions& opt, std::ostream& out, std::ostream& err) {
  const InstancePair pair = io::parse_pair(read_file(opt.in_path));
  if (opt.format == "ascii") {
    emit(io::render_ascii(pair.original(), pair.reconstruction()), opt.out_path, out);
    return kExitOk;
  }
  // pbm: one bitmap per set on a shared canvas
  if (opt.out_path.empty()) {
    err << "--format pbm requires --out <prefix>\n";
    return kExitUsage;
  }
  const int rows = std::max(max_row(pair.original()), max_row(pair.reconstruction()));
  const int cols = std::max(max_col(pair.original()), max_col(pair.reconstruction()));
  write_file(opt.out_path + ".f1.pbm", io::render_pbm(pair.original(), rows, cols));
  write_file(opt.out_path + ".f2.pbm", io::render_pbm(pair.reconstruction(), rows, cols));
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"staircase decompositions and stability bounds for binary images"
               " determined by row and column sums"};
  app.require_subcommand(1);

  GenOptions gen;
  CLI::App* cmd_gen_app = app.add_subcommand("gen", "generate a named instance family");
  cmd_gen_app->require_subcommand(1);
  CLI::App* gen1 = cmd_gen_app->add_subcommand("example1", "disjoint harmonic-tight family");
  gen1->add_option("--m", gen.spec.m, "size exponent (m >= 1)")->required();
  CLI::App* gen2 = cmd_gen_app->add_subcommand("example2", "overlapping harmonic family");
  gen2->add_option("--k", gen.spec.k, "overlap exponent (k >= 2)")->required();
  gen2->add_option("--m", gen.spec.m, "size exponent (m >= 2k-2)")->required();
  CLI::App* gen3 = cmd_gen_app->add_subcommand("example3", "large-overlap family");
  gen3->add_option("--n", gen.spec.n, "block size (n >= 1)")->required();
  gen3->add_option("--alpha", gen.spec.alpha, "projection error (alpha >= 1)")->required();
  for (CLI::App* g : {gen1, gen2, gen3}) {
    g->add_option("-o,--out", gen.out_path, "output path (default stdout)");
  }

  std::string analyze_path;
  CLI::App* cmd_analyze_app =
      app.add_subcommand("analyze", "metrics and bound report for a pair file");
  cmd_analyze_app->add_option("input", analyze_path, "pair file")->required();

  DecomposeOptions dec;
  CLI::App* cmd_dec_app =
      app.add_subcommand("decompose", "staircase decomposition certificate");
  cmd_dec_app->add_option("input", dec.in_path, "pair file")->required();
  cmd_dec_app->add_option("--cert", dec.cert_path, "certificate output path");
  cmd_dec_app->add_flag("--equalize", dec.do_equalize,
                        "equalize sizes before decomposing");

  VerifyOptions ver;
  std::string box_text = "6x6";
  std::string mode_text = "general";
  CLI::App* cmd_verify_app =
      app.add_subcommand("verify", "exhaustive desk-scale verification");
  cmd_verify_app->add_option("--max-cells", ver.spec.max_cells, "largest |F1| (default 6)");
  cmd_verify_app->add_option("--box", box_text, "F2 bounding box RxC (default 6x6)");
  cmd_verify_app->add_option("--mode", mode_text, "disjoint|general|unequal");
  cmd_verify_app->add_option("--jobs", ver.spec.jobs, "worker threads (default 1)");
  cmd_verify_app->add_flag("--force", ver.spec.force, "bypass the candidate guard");
  cmd_verify_app->add_option("--counterexample", ver.counterexample_path,
                             "where to write the first violating pair");

  RenderOptions ren;
  CLI::App* cmd_render_app = app.add_subcommand("render", "ASCII or PBM rendering");
  cmd_render_app->add_option("input", ren.in_path, "pair file")->required();
  cmd_render_app->add_option("--format", ren.format, "ascii|pbm (default ascii)")
      ->check(CLI::IsMember({"ascii", "pbm"}));
  cmd_render_app->add_option("--out", ren.out_path, "output path or pbm prefix");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (gen1->parsed()) gen.spec.family = families::Family::kExample1;
    if (gen2->parsed()) gen.spec.family = families::Family::kExample2;
    if (gen3->parsed()) gen.spec.family = families::Family::kExample3;
    if (cmd_gen_app->parsed()) return cmd_gen(gen, out);
    if (cmd_analyze_app->parsed()) return cmd_analyze(analyze_path, out, err);
    if (cmd_dec_app->parsed()) return cmd_decompose(dec, out, err);
    if (cmd_verify_app->parsed()) {
      if (!parse_box(box_text, ver.spec.box)) {
        err << "invalid --box, expected RxC\n";
        return kExitUsage;
      }
      if (mode_text == "disjoint") ver.spec.mode = oracle::Mode::kDisjoint;
      else if (mode_text == "general") ver.spec.mode = oracle::Mode::kGeneral;
      else if (mode_text == "unequal") ver.spec.mode = oracle::Mode::kUnequal;
      else {
        err << "invalid --mode, expected disjoint|general|unequal\n";
        return kExitUsage;
      }
      return cmd_verify(ver, out);
    }
    if (cmd_render_app->parsed()) return cmd_render(ren, out, err);
    err << "no command\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const UniquenessError& e) {
    err << e.what() << "\n";
    return kExitNotUnique;
  } catch (const SizeMismatchError& e) {
    err << e.what() << "\n";
    return kExitSizeMismatch;
  } catch (const GuardError& e) {
    err << e.what() << "\n";
    return kExitGuard;
  } catch (const std::invalid_argument& e) {
    err << "invalid parameters: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace tomo
