#ifndef GENTLE_REP_ORACLE_HPP
#define GENTLE_REP_ORACLE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "gentle/forbidden.hpp"
#include "gentle/walks.hpp"

namespace gentle {

/// Prime field F_p. Default p = 101; the acceptance suite re-runs with
/// 32003 to rule out characteristic accidents.
struct FieldSpec {
    std::uint32_t p = 101;
};

/// Dense matrix over F_p with row-vector right action: a row vector at the
/// source vertex times the matrix lands at the target vertex, so the path
/// a·b acts as mat(a)·mat(b).
class FpMatrix {
public:
    FpMatrix() = default;
    FpMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    std::uint32_t& at(int r, int c) { return data_[r * cols_ + c]; }
    std::uint32_t at(int r, int c) const { return data_[r * cols_ + c]; }

    static FpMatrix identity(int n);
    FpMatrix multiply(const FpMatrix& other, const FieldSpec& field) const;
    bool is_zero() const;

    /// Row echelon rank.
    int rank(const FieldSpec& field) const;
    /// Basis of the left null space {x : x·M = 0}, rows of the result.
    FpMatrix left_nullspace(const FieldSpec& field) const;
    /// Solves x·M = rhs for each row of rhs; requires consistency.
    FpMatrix solve_left(const FpMatrix& rhs, const FieldSpec& field) const;

private:
    int rows_ = 0, cols_ = 0;
    std::vector<std::uint32_t> data_;
};

/// A finite-dimensional right module presented as a representation: one
/// dimension per vertex and one matrix per arrow.
struct Representation {
    std::vector<int> dims;            // by vertex index
    std::vector<FpMatrix> mats;       // by arrow index
    int total_dim() const;
};

/// Asserts mat(a)·mat(b) = 0 for every relation (a, b); throws on failure.
void check_relations(const BoundQuiver& bq, const Representation& rep, const FieldSpec& field);

Representation string_rep(const BoundQuiver& bq, const StringWord& w, const FieldSpec& field);

/// Band module B(n, lambda): n copies of the walk with the closing letter
/// acting by the Jordan block J_n(lambda). lambda must be nonzero mod p.
Representation band_rep(const BoundQuiver& bq, const StringWord& band, int n,
                        std::uint32_t lambda, const FieldSpec& field);

/// Path-basis constructions, independent of string_rep.
Representation projective_rep(const BoundQuiver& bq, int v, const FieldSpec& field);
Representation injective_rep(const BoundQuiver& bq, int v, const FieldSpec& field);

/// Multiplicity of each simple in rep / rad(rep).
std::vector<int> top_of(const BoundQuiver& bq, const Representation& rep,
                        const FieldSpec& field);
/// Multiplicity of each simple in the socle.
std::vector<int> socle_of(const BoundQuiver& bq, const Representation& rep,
                          const FieldSpec& field);

struct CoverResult {
    std::vector<int> cover_multiplicities;  // by vertex
    Representation kernel;
    int cover_dim = 0;
};

/// Minimal projective cover of rep and its kernel, computed exactly over
/// F_p. Asserts minimality: the cover's top equals the module's top.
CoverResult minimal_cover(const BoundQuiver& bq, const Representation& rep,
                          const FieldSpec& field);

struct OracleDim {
    Dim value;          // Finite(n), or infinite() meaning "AtLeast(depth_cap)"
    bool at_least = false;
    int depth_cap = 0;
};

struct ResolutionStep {
    std::vector<int> cover_multiplicities;
    std::vector<int> kernel_dims;
};

struct ResolutionTrace {
    std::vector<ResolutionStep> steps;
    bool terminated = false;
    int depth_cap = 0;
};

OracleDim pd_oracle(const BoundQuiver& bq, const Representation& rep, int depth_cap,
                    const FieldSpec& field, ResolutionTrace* trace = nullptr);

/// Dual representation over the opposite quiver (transposed matrices).
Representation dual_rep(const BoundQuiver& bq, const Representation& rep);

OracleDim id_oracle(const BoundQuiver& bq, const Representation& rep, int depth_cap,
                    const FieldSpec& field, ResolutionTrace* trace = nullptr);

struct LambdaIndependenceReport {
    bool all_one = true;
    std::vector<std::string> failures;
};

/// pd and id of B(n, lambda) for n in {1,2} and three distinct nonzero
/// lambda values; all six runs must give (1, 1).
LambdaIndependenceReport lambda_independence(const BoundQuiver& bq, const StringWord& band,
                                             const FieldSpec& field);

}  // namespace gentle

#endif
