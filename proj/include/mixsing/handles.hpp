#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "mixsing/seifert.hpp"

namespace mixsing {

// Component ids: 0 is the 4-ball piece, 1..ell are the S^1 x B^3 pieces.
struct BallPiece {
  int id = 0;
};

struct SolidTorusPiece {
  int id = 0;
};

struct RoundHandle {
  int index = 0;  // 1-based attachment order
  std::int64_t d_p = 0;
  int joins_a = 0;
  int joins_b = 0;
};

// Stage i >= 1: remove 2 d_p disks from S_{i-1} and glue in d_p annuli.
struct SurgeryRecord {
  std::int64_t disks_removed = 0;
  std::int64_t annuli_glued = 0;
};

struct FiberStage {
  int index = 0;
  std::int64_t chi = 0;
  std::int64_t components = 0;
  std::int64_t boundary_circles = 0;
  std::optional<SurgeryRecord> surgery;
};

struct HandleDecomposition {
  BallPiece ball_piece;
  std::vector<SolidTorusPiece> solid_tori;
  std::vector<RoundHandle> round_handles;
  std::vector<FiberStage> stages;
};

// Handles are attached in increasing order of critical_values when given
// (one per solid torus), ties broken by index.
HandleDecomposition build(const SeifertLinkData& s, const std::vector<double>& critical_values = {});

// Empty when the ledger is sound; otherwise one message per violated rule.
std::vector<std::string> check_ledger(const HandleDecomposition& h);

struct GenusReport {
  std::int64_t genus = 0;
  std::int64_t boundary = 0;
};
// Throws DomainError when the final stage is disconnected or the genus is not integral.
GenusReport genus_report(const HandleDecomposition& h);

}  // namespace mixsing
