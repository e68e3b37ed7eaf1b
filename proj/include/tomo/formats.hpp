#pragma once

#include <string>
#include <vector>

#include "tomo/bounds.hpp"
#include "tomo/instance.hpp"
#include "tomo/oracle.hpp"
#include "tomo/staircase.hpp"

namespace tomo::io {

inline constexpr const char* kPairHeader = "tomo-pair 1";
inline constexpr const char* kCertHeader = "tomo-cert 1";
inline constexpr int kMaxCoordinate = 1000000;

/// Pair file: the header line, optional "#" comment lines, then
/// "F1 <row> <col>" / "F2 <row> <col>" lines (single spaces, 1-based).
/// Output is sorted by (set, row, col); parse accepts any line order and
/// rejects duplicates. parse_pair(render_pair(x)) == x.
InstancePair parse_pair(const std::string& text);
std::string render_pair(const PointSet& original, const PointSet& reconstruction);

struct Certificate {
  int alpha = 0;
  int overlap = 0;
  int half_diff = 0;
  std::vector<Staircase> staircases;
};

/// Certificate file: the header line, a metrics line
/// "alpha <a> p <p> u <u>", then one line per chain:
/// "S <k>: (r,c)/<1|2> -> (r,c)/<1|2> -> ...".
std::string render_certificate(const InstancePair& pair,
                               const std::vector<Staircase>& staircases);
Certificate parse_certificate(const std::string& text);

/// Re-check an emitted certificate against the pair it describes without
/// running the decomposition: metrics line, chain invariants, disjointness,
/// exact cover of the symmetric difference, chain count. Throws
/// std::invalid_argument on the first failure.
void verify_certificate(const InstancePair& pair, const Certificate& cert);

std::string render_metrics_block(const Metrics& m, bool unique);
std::string render_bound_report(const bounds::BoundReport& report);

/// ASCII grid, row 1 on top: '.' empty, 'o' original only,
/// 'x' reconstruction only, '@' both. Empty for an empty pair.
std::string render_ascii(const PointSet& original, const PointSet& reconstruction);

/// One plain PBM (P1) bitmap of the given set on a rows x cols canvas.
std::string render_pbm(const PointSet& s, int rows, int cols);

std::string render_summary(const oracle::VerificationSummary& summary);

}  // namespace tomo::io
