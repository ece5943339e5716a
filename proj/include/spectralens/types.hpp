#ifndef SPECTRALENS_TYPES_HPP
#define SPECTRALENS_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>
#include <vector>

namespace spectralens {

// Typed failure reasons. The CLI maps these onto its exit-code contract:
// validation failures exit 2, numeric failures exit 3.
enum class errc {
  io_failure,
  bad_format,
  non_finite,
  bad_rank,
  bad_manifest,
  unknown_category,
  duplicate_entry,
  missing_pre,
  bad_argument,
  shape_mismatch,
  zero_norm_row,
  empty_spectrum,
  tail_too_small,
  degenerate_tail,
  not_symmetric,
  no_convergence,
  negative_eigenvalue,
  degenerate_group,
};

class Error : public std::runtime_error {
 public:
  Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

  // Numeric failures are conditions of the computation itself, not of the
  // inputs as declared.
  bool numeric() const noexcept {
    switch (code_) {
      case errc::not_symmetric:
      case errc::no_convergence:
      case errc::negative_eigenvalue:
      case errc::degenerate_group:
        return true;
      default:
        return false;
    }
  }

 private:
  errc code_;
};

enum class Precision { f32, f64 };

inline double machine_eps(Precision p) {
  return p == Precision::f32 ? static_cast<double>(std::numeric_limits<float>::epsilon())
                             : std::numeric_limits<double>::epsilon();
}

// One layer's 2-D weight array with its identity. Entries are finite, n,m >= 1.
struct WeightMatrix {
  Eigen::MatrixXd data;
  std::string layer_id;
  std::string checkpoint_id;
  Precision storage = Precision::f64;  // precision the values were stored at
};

// n samples x d dims of embedding vectors for diversity scoring.
struct EmbeddingSet {
  Eigen::MatrixXd data;
  std::string label;
};

// Sorted nonnegative eigenvalues of a correlation matrix. Eigenvalues at or
// below rank_cutoff were dropped and counted; retained.size() + dropped_count
// equals min(source rows, source cols).
struct Spectrum {
  std::vector<double> eigenvalues;  // ascending, all > rank_cutoff
  Eigen::Index source_rows = 0;
  Eigen::Index source_cols = 0;
  double rank_cutoff = 0.0;
  int dropped_count = 0;

  bool empty() const noexcept { return eigenvalues.empty(); }
  std::size_t size() const noexcept { return eigenvalues.size(); }
};

}  // namespace spectralens

#endif  // SPECTRALENS_TYPES_HPP
