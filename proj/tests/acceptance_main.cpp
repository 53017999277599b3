// Acceptance suite: runs every cross-validation criterion at its pinned
// tolerance and prints one pass/fail line per criterion. Criteria 1-11 come
// from the library selftest battery; criterion 12 drives the CLI binary
// (path in argv[1]) and checks output determinism and the exit-code contract.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "semicl/selftest.hpp"

namespace {

struct RunOutcome {
  int exit_code = -1;
  std::string out;
  std::string err;
};

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

RunOutcome run(const std::string& cli, const std::string& args, int tag) {
  const std::string out_path = "/tmp/semicl_acc_" + std::to_string(tag) + ".out";
  const std::string err_path = "/tmp/semicl_acc_" + std::to_string(tag) + ".err";
  const std::string cmd = cli + " " + args + " >" + out_path + " 2>" + err_path;
  const int status = std::system(cmd.c_str());
  RunOutcome r;
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  r.out = slurp(out_path);
  r.err = slurp(err_path);
  std::remove(out_path.c_str());
  std::remove(err_path.c_str());
  return r;
}

bool check_cli_contract(const std::string& cli, std::string& detail) {
  std::ostringstream why;
  bool ok = true;
  int tag = 0;

  // Byte-identical CSV for repeated identical runs.
  const std::string thermo_args =
      "thermo --system harmonic --s 0.05 --T 0.5 --T 1 --T 2 --route both --format csv";
  const RunOutcome t1 = run(cli, thermo_args, ++tag);
  const RunOutcome t2 = run(cli, thermo_args, ++tag);
  if (t1.exit_code != 0 || t1.out != t2.out || t1.out.empty()) {
    ok = false;
    why << "[thermo CSV not deterministic or failed] ";
  }
  const std::string spec_args =
      "spectrum --system box --s 0.01 --n-max 12 --method both --format csv";
  const RunOutcome s1 = run(cli, spec_args, ++tag);
  const RunOutcome s2 = run(cli, spec_args, ++tag);
  if (s1.exit_code != 0 || s1.out != s2.out) {
    ok = false;
    why << "[spectrum CSV not deterministic or failed] ";
  }

  // Exit code 0 on a healthy run.
  if (run(cli, "spectrum --system harmonic --s 0.1 --n-max 5", ++tag).exit_code != 0) {
    ok = false;
    why << "[healthy spectrum run did not exit 0] ";
  }

  // Exit code 2: domain violation, offending field named on stderr.
  const RunOutcome bad_a = run(cli, "spectrum --system box --a -1 --s 0.1 --n-max 2", ++tag);
  if (bad_a.exit_code != 2 || bad_a.err.find('a') == std::string::npos) {
    ok = false;
    why << "[bad --a: expected exit 2 naming the field, got " << bad_a.exit_code << "] ";
  }

  // Exit code 2: no closed form for the power law.
  const RunOutcome no_closed =
      run(cli, "spectrum --system powerlaw --s 0.1 --method closed --n-max 3", ++tag);
  if (no_closed.exit_code != 2 ||
      no_closed.err.find("no closed form") == std::string::npos) {
    ok = false;
    why << "[closed powerlaw: expected exit 2 'no closed form', got "
        << no_closed.exit_code << "] ";
  }

  // Exit code 2: exact thermodynamic route rejected for s < 0.
  const RunOutcome neg_s =
      run(cli, "thermo --system harmonic --s -0.1 --T 1 --route exact", ++tag);
  if (neg_s.exit_code != 2 || neg_s.err.find("first-order") == std::string::npos) {
    ok = false;
    why << "[s<0 exact: expected exit 2 pointing at first-order, got " << neg_s.exit_code
        << "] ";
  }

  // Exit code 3: a sweep in which every row fails.
  const RunOutcome sweep = run(
      cli,
      "sweep --system harmonic --s -0.1 --axis T --start 0.5 --stop 2 --count 4 "
      "--observable Z",
      ++tag);
  if (sweep.exit_code != 3) {
    ok = false;
    why << "[all-failing sweep: expected exit 3, got " << sweep.exit_code << "] ";
  }

  // A sweep with at least one good row still exits 0 and reports row errors.
  const RunOutcome mixed = run(
      cli,
      "sweep --system harmonic --axis s --start -0.05 --stop 0.1 --count 4 "
      "--observable U --T 1",
      ++tag);
  if (mixed.exit_code != 0) {
    ok = false;
    why << "[mixed sweep: expected exit 0, got " << mixed.exit_code << "] ";
  }

  // Exit code 4: config parse errors (malformed JSON, unknown key).
  {
    std::ofstream bad("/tmp/semicl_acc_bad.json");
    bad << "{ not json";
  }
  const RunOutcome bad_json =
      run(cli, "spectrum --config /tmp/semicl_acc_bad.json --n-max 2", ++tag);
  if (bad_json.exit_code != 4) {
    ok = false;
    why << "[malformed config: expected exit 4, got " << bad_json.exit_code << "] ";
  }
  {
    std::ofstream bad("/tmp/semicl_acc_unknown.json");
    bad << R"({"systm": {"variant": "box"}})";
  }
  const RunOutcome unknown =
      run(cli, "spectrum --config /tmp/semicl_acc_unknown.json --n-max 2", ++tag);
  if (unknown.exit_code != 4) {
    ok = false;
    why << "[unknown config key: expected exit 4, got " << unknown.exit_code << "] ";
  }
  std::remove("/tmp/semicl_acc_bad.json");
  std::remove("/tmp/semicl_acc_unknown.json");

  // selftest runs the whole battery and exits 0.
  const RunOutcome st = run(cli, "selftest", ++tag);
  if (st.exit_code != 0) {
    ok = false;
    why << "[selftest: expected exit 0, got " << st.exit_code << "] ";
  }

  detail = ok ? "determinism and exit codes 0/2/3/4 observed" : why.str();
  return ok;
}

}  // namespace

int main(int argc, char** argv) {
  int failures = 0;
  int index = 0;
  auto report = [&](bool pass, const std::string& name, const std::string& detail) {
    ++index;
    std::printf("[%s] %02d %s — %s\n", pass ? "PASS" : "FAIL", index, name.c_str(),
                detail.c_str());
    if (!pass) ++failures;
  };

  for (const semicl::CheckResult& r : semicl::run_selftest())
    report(r.pass, r.name, r.detail);

  if (argc > 1) {
    std::string detail;
    const bool ok = check_cli_contract(argv[1], detail);
    report(ok, "CLI determinism and exit-code contract", detail);
  } else {
    report(false, "CLI determinism and exit-code contract",
           "no CLI path given on the command line");
  }

  if (failures == 0) std::printf("acceptance: all %d criteria passed\n", index);
  else std::printf("acceptance: %d of %d criteria FAILED\n", failures, index);
  return failures;
}
