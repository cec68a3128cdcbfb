#ifndef MF_SIM_TYPES_HPP
#define MF_SIM_TYPES_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "mf/rng.hpp"

namespace mf::sim {

// Positions, reaches and per-frame speeds are integer milli-units so frame
// stepping is exact: replays, golden traces and the mirror-symmetry property
// hold bit-for-bit on every platform. 1000 mu = 1 arena unit.
using MilliUnits = int32_t;

enum class MoveKind { Motion, Attack, Combo };

enum class MovePhase { Startup, Active, Recovery };

struct MoveSpec {
  int move_id = 0;
  std::string name;
  MoveKind kind = MoveKind::Attack;
  int startup_frames = 0;
  int active_frames = 0;
  int recovery_frames = 0;
  int damage = 0;
  MilliUnits reach = 0;
  MilliUnits knockback = 0;
  int self_stun_on_whiff = 0;
  MilliUnits lunge = 0;      // forward drift per startup frame
  MilliUnits drift = 0;      // forward (negative: backward) drift per active frame
  bool airborne = false;     // evades hits during the active phase

  int total_frames() const { return startup_frames + active_frames + recovery_frames; }
};

struct MoveInProgress {
  int move_id = 0;
  int age = 1;  // frames elapsed including the current one
  bool has_hit = false;
};

struct FighterState {
  MilliUnits x = 0;
  int hp = 0;
  int facing = 1;  // +1 faces right, -1 faces left; always toward the opponent
  std::optional<MoveInProgress> move;
  int stun_frames = 0;
  bool guard = false;  // guarding during the frame just stepped
};

enum class Winner { P1, P2, Draw };

struct GameState {
  FighterState p1;
  FighterState p2;
  int64_t frame = 0;
  int64_t round_time_limit = 0;
  Rng rng;  // consumed only by scripted bots
  std::optional<Winner> outcome;

  bool terminal() const { return outcome.has_value(); }
};

// One decision; motion and attack mirror the flat 48-pair scheme, a present
// combo index overrides both.
struct ActionCommand {
  int motion_idx = 0;
  int attack_idx = 0;
  std::optional<int> combo_idx;

  bool operator==(const ActionCommand&) const = default;
};

struct FrameEvents {
  int damage_dealt_p1 = 0;  // inflicted by p1 on p2 this frame
  int damage_dealt_p2 = 0;
  bool p1_advanced = false;  // p1 closed distance this frame
  std::optional<Winner> round_over;
};

struct RewardConfig {
  double dense_coef = 3.0;
  double aggressive_coef = 1.0;
  double win_bonus = 1.0;
  double lose_penalty = -1.0;
};

}  // namespace mf::sim

#endif  // MF_SIM_TYPES_HPP
