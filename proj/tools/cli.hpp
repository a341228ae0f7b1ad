#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hgc/coloring.hpp"
#include "hgc/degeneracy.hpp"
#include "hgc/hypergraph.hpp"

namespace hgc::cli {

enum ExitCode : int { kPass = 0, kViolation = 1, kInputError = 2 };

/// Bad command-line or file input; reported with exit code 2.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A hypergraph file, optionally carrying "lists" and "f" next to
/// "vertices" and "edges".
struct Input {
  Hypergraph hypergraph;
  std::optional<ListAssignment> lists;
  std::optional<VectorFunction> f;
};

/// `origin` names the source in diagnostics.
Input parse_input(std::istream& in, const std::string& origin);
/// "-" reads standard input.
Input parse_input_path(const std::string& path);

/// Runs one invocation (args exclude the program name). Reports go to `out`
/// unless --out is given; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

/// Worker count from HGC_THREADS, default 1.
std::size_t thread_count();

}  // namespace hgc::cli
