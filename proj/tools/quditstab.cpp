// Copyright 2026 The quditstab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// quditstab info|standardize|member <file> [options]
//
// Exit codes: 0 success, 1 parse or usage error, 2 invalid stabilizer,
// 3 dense oracle mismatch. Output is buffered and only written on success,
// so error paths print nothing but the diagnostic on stderr.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "quditstab.hpp"

namespace {

using namespace quditstab;

constexpr int kExitParse = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitOracle = 3;

struct Failure {
  int code;
  std::string message;
};

struct Options {
  std::string file;
  std::string pauli;
  std::string gates_path;
  std::string json_path;
  bool oracle = false;
  std::optional<std::size_t> oracle_bound;
};

std::size_t resolve_bound(const Options& opt) {
  if (opt.oracle_bound) return std::min(*opt.oracle_bound, kMaxOracleBound);
  if (const char* env = std::getenv("QUDITSTAB_ORACLE_BOUND")) {
    try {
      return std::min<std::size_t>(std::stoul(env), kMaxOracleBound);
    } catch (const std::exception&) {
      throw Failure{kExitParse, "QUDITSTAB_ORACLE_BOUND is not a number"};
    }
  }
  return kDefaultOracleBound;
}

StabilizerPresentation load(const std::string& path) {
  try {
    return load_stabilizer_file(path);
  } catch (const Error& e) {
    throw Failure{kExitParse, path + ": " + e.what()};
  }
}

void require_valid_or_fail(const StabilizerPresentation& s) {
  const auto report = is_valid(s);
  if (!report.valid()) throw Failure{kExitInvalid, "invalid stabilizer: " + report.describe()};
}

bool oracle_fits(const StabilizerPresentation& s, std::size_t bound) {
  try {
    dense_dimension(s.dim(), s.num_qudits(), bound);
    return true;
  } catch (const OracleTooLarge&) {
    return false;
  }
}

void write_file(const std::string& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out || !(out << contents)) throw Failure{kExitParse, "cannot write '" + path + "'"};
}

void describe(std::ostream& os, const StabilizerPresentation& s) {
  os << "D=" << s.dim() << " n=" << s.num_qudits() << " k=" << s.num_generators() << '\n';
  os << "generators:\n";
  for (const auto& g : s.to_generators()) os << "  " << format_pauli(g) << '\n';
  os << "parity-check matrix:\n" << format_check_matrix(s.matrix(), s.num_qudits(), "  ");
  os << "phase vector: " << format_phase_vector(s.phases()) << '\n';
  os << "  (phases are tracked exactly through every operation; they are part of the group)\n";
}

std::string plural(std::size_t count, const std::string& noun) {
  return std::to_string(count) + " " + noun + (count == 1 ? "" : "s");
}

std::string run_oracle(std::ostream& os, const oracle::Verdict& verdict) {
  os << "oracle: " << (verdict.pass ? "PASS" : "FAIL") << '\n';
  for (const auto& note : verdict.notes) os << "  " << note << '\n';
  return verdict.pass ? "" : "oracle mismatch";
}

std::string cmd_info(const Options& opt) {
  const auto s = load(opt.file);
  std::ostringstream os;
  describe(os, s);
  require_valid_or_fail(s);
  os << "valid: yes\n";
  const auto order = group_order(s);
  const auto k_dim = code_dimension(s);
  os << "|S| = " << order << '\n';
  os << "K = " << k_dim << '\n';
  os << "K * |S| = " << k_dim * order << " = D^n\n";
  if (opt.oracle) {
    const auto bound = resolve_bound(opt);
    if (!oracle_fits(s, bound)) {
      os << "oracle: SKIPPED (D^n exceeds bound " << bound << ")\n";
    } else if (!run_oracle(os, oracle::verify_presentation(s, bound)).empty()) {
      std::cerr << os.str();
      throw Failure{kExitOracle, "dense oracle disagrees with the algebraic result"};
    }
  }
  return os.str();
}

std::string cmd_standardize(const Options& opt) {
  const auto s = load(opt.file);
  require_valid_or_fail(s);
  const auto sf = standardize(s);
  std::ostringstream os;
  os << transcript(sf);
  if (opt.oracle) {
    const auto bound = resolve_bound(opt);
    if (!oracle_fits(s, bound)) {
      os << "oracle: SKIPPED (D^n exceeds bound " << bound << ")\n";
    } else if (!run_oracle(os, oracle::verify_standard_form(sf, bound)).empty()) {
      std::cerr << os.str();
      throw Failure{kExitOracle, "dense oracle disagrees with the standard form"};
    }
  }
  if (sf.already_standard())
    os << "already standard, r=" << sf.r << '\n';
  else
    os << "standardized with " << plural(sf.gates.size(), "gate") << " and "
       << plural(sf.row_ops.size(), "row operation") << ", r=" << sf.r << '\n';
  if (!opt.gates_path.empty()) write_file(opt.gates_path, format_gate_file(sf.gates));
  if (!opt.json_path.empty()) write_file(opt.json_path, to_json(sf).dump(2) + "\n");
  return os.str();
}

std::string cmd_member(const Options& opt) {
  const auto s = load(opt.file);
  std::optional<PauliProduct> p;
  try {
    p = parse_pauli(opt.pauli, s.modulus(), s.num_qudits());
  } catch (const Error& e) {
    throw Failure{kExitParse, "Pauli product: " + std::string(e.what())};
  }
  require_valid_or_fail(s);
  return std::string(contains(s, *p) ? "yes" : "no") + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Qudit stabilizer groups over Z_D: size, validity, standard form"};
  app.require_subcommand(1);
  Options opt;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("file", opt.file, "stabilizer file")->required();
  };
  auto add_oracle = [&](CLI::App* sub) {
    sub->add_flag("--oracle", opt.oracle, "cross-check with dense matrices when D^n fits the bound");
    sub->add_option("--oracle-bound", opt.oracle_bound,
                    "largest D^n for the dense oracle (default 256, max 1024; env QUDITSTAB_ORACLE_BOUND)");
  };

  auto* info = app.add_subcommand("info", "print |S|, K and validity");
  add_common(info);
  add_oracle(info);

  auto* stdform = app.add_subcommand("standardize", "reduce to standard form and print the transcript");
  add_common(stdform);
  add_oracle(stdform);
  stdform->add_option("--emit-gates", opt.gates_path, "write the gate sequence, one gate per line");
  stdform->add_option("--json", opt.json_path, "write the standard form as JSON");

  auto* member = app.add_subcommand("member", "test membership of a Pauli product");
  add_common(member);
  member->add_option("pauli", opt.pauli, "Pauli product, e.g. \"w^2 X1^3 Z2^2\"")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    std::string out;
    if (*info) out = cmd_info(opt);
    else if (*stdform) out = cmd_standardize(opt);
    else out = cmd_member(opt);
    std::cout << out;
    return 0;
  } catch (const Failure& f) {
    std::cerr << "error: " << f.message << '\n';
    return f.code;
  } catch (const InvalidStabilizer& e) {
    std::cerr << "error: invalid stabilizer: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitOracle;
  }
}
