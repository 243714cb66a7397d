#pragma once

#include <string>
#include <vector>

#include "json.hpp"

namespace chromfold::cli {

/// Exit status contract shared by all subcommands.
enum ExitCode : int { kOk = 0, kCertificateFailed = 1, kUsage = 2 };

struct Output {
  std::string path;  // empty: stdout
};

/// Parses "a,b,c" into numbers; throws chromfold::Error on junk.
std::vector<double> parse_list(const std::string& text);

/// Writes `text` to the output path or to stdout.
void emit(const Output& out, const std::string& text);
void emit(const Output& out, const nlohmann::json& doc);

struct SubdivideArgs {
  int n = 2;
  int r = 1;
  double mu = 1.0;
  std::string in;
  Output out;
};
int run_subdivide(const SubdivideArgs& args);

struct OracleArgs {
  int n = 2;
  bool list = false;
  Output out;
};
int run_oracle(const OracleArgs& args);

struct FoldArgs {
  int n = 2;
  int r = 1;
  double mu = 1.0;
  std::string point;
  double t = 0.0;
  Output out;
};
int run_fold(const FoldArgs& args);
int run_unfold(const FoldArgs& args);

struct JiggleArgs {
  int n = 1;
  int period = 2;
  int r = 1;
  double mu = 1.0;
  std::vector<std::string> fields;
  bool pencil_to_exp = false;
  int r_max = 4;
  std::string export_format;
  std::string export_path;
  Output out;
};
int run_jiggle(const JiggleArgs& args);
int run_minimal_r(const JiggleArgs& args);

struct PencilArgs {
  std::string derivative;
  std::string from;
  std::string to;
  Output out;
};
int run_pencil(const PencilArgs& args);

struct CollapseArgs {
  std::string in;
  int n = -1;
  std::string target = "bottom";
  Output out;
};
int run_collapse(const CollapseArgs& args);
int run_prism(const CollapseArgs& args);

struct CurveArgs {
  std::vector<std::string> inputs;
  int steps = 16;
  Output out;
};
int run_turning(const CurveArgs& args);
int run_wg(const CurveArgs& args);

struct EversionArgs {
  std::string grid = "32x32x16";
  Output out;
};
int run_eversion_check(const EversionArgs& args);

struct ExportArgs {
  std::string in;
  bool colored = false;
  Output out;
};
int run_export_off(const ExportArgs& args);

struct FiguresArgs {
  std::string dir = ".";
};
int run_figures(const FiguresArgs& args);

}  // namespace chromfold::cli
