#pragma once

#include <filesystem>
#include <istream>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "monorel/doublecone.hpp"
#include "monorel/gossez.hpp"
#include "monorel/subspace.hpp"

namespace monorel {

// Problem files are line based. '#' starts a comment, blank lines are
// ignored, and matrices are blocks of whitespace-separated rationals closed
// by "end". Each row of a point block is (x_1 .. x_n, y_1 .. y_n).
//
//   kind subspace          kind doublecone        kind gossez
//   n 1                    n 2                    x 1:1 2:-1
//   basis                  skew                   v 1:1
//   1 1                    end
//   end                    generators
//                          0 1 1 1
//                          end
//
//   kind sum  /  n 1  /  m 1  /  M .. end  /  N .. end  /  A .. end
//   (M over R^n, N over R^m, A with m rows and n columns)

struct SubspaceProblem {
  std::size_t n = 0;
  std::vector<Vec> basis;

  Subspace subspace() const;
};

struct ConeProblem {
  std::size_t n = 0;
  std::vector<Vec> skew;
  std::vector<Vec> generators;

  DoubleCone cone() const;
};

struct GossezProblem {
  FinSeq x;
  FinSeq v;
};

struct SumProblem {
  std::size_t n = 0;
  std::size_t m = 0;
  std::vector<Vec> first;   // over R^n
  std::vector<Vec> second;  // over R^m
  Mat a;                    // m x n

  Subspace result() const;
};

using Problem = std::variant<SubspaceProblem, ConeProblem, GossezProblem, SumProblem>;

std::string_view kind_name(const Problem& p);

/// Throws ParseError with a line number on malformed input.
Problem parse_problem(std::istream& in);
Problem parse_problem(std::string_view text);
Problem read_problem_file(const std::filesystem::path& path);

/// Canonical text. parse_problem(write_problem(p)) writes back to the same bytes.
std::string write_problem(const Problem& p);

/// 2n rationals separated by commas and/or whitespace.
Point parse_point(std::string_view text, std::size_t n);

/// "i:v" tokens separated by commas and/or whitespace; empty text is the zero
/// sequence.
FinSeq parse_sequence(std::string_view text);
std::string format_sequence(const FinSeq& s);

}  // namespace monorel
