#include "cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "relcm/errors.hpp"
#include "relcm/local_cohomology.hpp"
#include "relcm/module_file.hpp"
#include "relcm/rcm.hpp"
#include "relcm/report.hpp"

namespace relcm::cli {

namespace {

std::string readSource(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path);
  buf << in.rdbuf();
  return buf.str();
}

Window parseWindow(const std::string& text, const char* flag) {
  Window w;
  char colon = 0;
  std::istringstream in(text);
  if (!(in >> w.lo >> colon >> w.hi) || colon != ':' || !in.eof() || w.lo > w.hi)
    throw InputError(std::string(flag) + " expects lo:hi with lo <= hi, got '" + text + "'");
  return w;
}

std::string errorKind(const std::exception& e) {
  if (dynamic_cast<const ParseError*>(&e)) return "ParseError";
  if (dynamic_cast<const DegreeInconsistent*>(&e)) return "DegreeInconsistent";
  if (dynamic_cast<const NotBihomogeneous*>(&e)) return "NotBihomogeneous";
  if (dynamic_cast<const ShapeMismatch*>(&e)) return "ShapeMismatch";
  if (dynamic_cast<const MixedVariables*>(&e)) return "MixedVariables";
  if (dynamic_cast<const InputError*>(&e)) return "InputError";
  if (dynamic_cast<const ZeroModule*>(&e)) return "ZeroModule";
  if (dynamic_cast<const NotRelativeCM*>(&e)) return "NotRelativeCM";
  if (dynamic_cast<const NotCohenMacaulay*>(&e)) return "NotCohenMacaulay";
  if (dynamic_cast<const SearchExhausted*>(&e)) return "SearchExhausted";
  if (dynamic_cast<const PreconditionViolation*>(&e)) return "PreconditionViolation";
  if (dynamic_cast<const MathError*>(&e)) return "MathError";
  if (dynamic_cast<const InternalError*>(&e)) return "InternalError";
  return "InternalError";
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Relative Cohen-Macaulay analysis of bigraded modules over K[x1..xm, y1..yn]", "rcmtool"};
  app.require_subcommand(1);
  app.fallthrough();

  std::uint64_t seed = 0;
  std::string format = "text";
  std::optional<std::uint32_t> field;
  app.add_option("--seed", seed, "Seed for randomized searches and random corpus entries");
  app.add_option("--format", format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--field", field, "Characteristic of the coefficient field, overriding the file");

  std::string path;
  auto addModuleArg = [&](CLI::App* sub) { sub->add_option("module", path, "Module file, or - for stdin")->required(); };

  auto* analyze = app.add_subcommand("analyze", "Invariants, relative CM verdicts and identity checks");
  addModuleArg(analyze);
  auto* rcm = app.add_subcommand("rcm", "Relative CM verdicts with respect to Q and P");
  addModuleArg(rcm);

  auto* lc = app.add_subcommand("lc", "Table of the components H^i_Q(M)_j");
  addModuleArg(lc);
  std::optional<int> lcI, jMin, jMax;
  lc->add_option("--i", lcI, "Cohomological index; defaults to rdim(Q) for relatively CM modules");
  lc->add_option("--j-min", jMin, "Smallest j; defaults to the start of the default window");
  lc->add_option("--j-max", jMax, "Largest j; defaults to the end of the default window");

  auto* resolve = app.add_subcommand("resolve", "Minimal bigraded free resolution");
  addModuleArg(resolve);

  auto* thm22 = app.add_subcommand("thm22", "Free K[x]-resolution of H^q_Q(M)_j for relatively CM modules");
  addModuleArg(thm22);
  int q = 0, j = 0;
  thm22->add_option("--q", q, "Relative dimension")->required();
  thm22->add_option("--j", j, "y-degree")->required();

  auto* oracle = app.add_subcommand("oracle-check", "Compare local cohomology dimensions with strand duality");
  addModuleArg(oracle);
  std::string kWindow, jWindow;
  oracle->add_option("--k-window", kWindow, "x-degrees lo:hi");
  oracle->add_option("--j-window", jWindow, "y-degrees lo:hi");

  auto* corpus = app.add_subcommand("corpus", "The built-in corpus of test modules");
  corpus->require_subcommand(1);
  corpus->add_subcommand("list", "List corpus entries with their expected values");
  auto* gen = corpus->add_subcommand("gen", "Print a corpus entry as a module file; 'random' uses --seed");
  std::string entryName;
  gen->add_option("name", entryName, "Entry name")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream cliOut, cliErr;
    int code = app.exit(e, cliOut, cliErr);
    out << cliOut.str();
    err << cliErr.str();
    return code == 0 ? kExitOk : kExitInput;
  }

  auto emit = [&](const Json& report) { out << (format == "json" ? renderJson(report) : renderText(report)); };

  try {
    if (corpus->parsed()) {
      if (gen->parsed()) {
        std::string name = entryName == "random" ? "random_" + std::to_string(seed) : entryName;
        CorpusEntry entry = corpusEntry(name);
        out << (format == "json" ? printModuleJson(entry.module) : printModuleFile(entry.module));
      } else {
        emit(corpusListReport(standardCorpus()));
      }
      return kExitOk;
    }

    PresentedModule m = parseModuleFile(readSource(path), field);
    if (analyze->parsed()) {
      emit(analyzeReport(m, seed));
    } else if (rcm->parsed()) {
      emit(rcmVerdictReport(m));
    } else if (lc->parsed()) {
      int i = 0;
      if (lcI) {
        i = *lcI;
      } else {
        RCMReport r = rcmReport(m);
        if (!r.q.isRCM) throw NotRelativeCM("--i is required when M is not relative Cohen-Macaulay with respect to Q");
        i = *r.q.rdim;
      }
      Window w = defaultJWindow(m);
      int lo = jMin.value_or(w.lo), hi = jMax.value_or(w.hi);
      if (lo > hi) throw InputError("--j-min exceeds --j-max");
      emit(lcTableReport(m, i, lo, hi));
    } else if (resolve->parsed()) {
      emit(resolutionReport(m));
    } else if (thm22->parsed()) {
      emit(componentResolutionReport(m, q, j));
    } else if (oracle->parsed()) {
      Window kw = kWindow.empty() ? defaultKWindow(m) : parseWindow(kWindow, "--k-window");
      Window jw = jWindow.empty() ? defaultJWindow(m) : parseWindow(jWindow, "--j-window");
      emit(crossCheckJson(crossCheck(m, kw, jw)));
    }
    return kExitOk;
  } catch (const InputError& e) {
    err << errorKind(e) << ": " << e.what() << "\n";
    return kExitInput;
  } catch (const MathError& e) {
    err << errorKind(e) << ": " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    err << errorKind(e) << ": " << e.what() << "\n";
    return kExitInternal;
  }
}

}  // namespace relcm::cli
