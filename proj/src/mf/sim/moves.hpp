#ifndef MF_SIM_MOVES_HPP
#define MF_SIM_MOVES_HPP

#include <map>
#include <string>
#include <vector>

#include "mf/sim/types.hpp"

namespace mf::sim {

// The motion set. Defense/forward/crouch variants are continuous (re-chosen
// every frame); jump and the flips commit the fighter to a MoveSpec.
enum Motion {
  kMotionDefense = 0,
  kMotionForward = 1,
  kMotionJump = 2,
  kMotionCrouch = 3,
  kMotionBackFlip = 4,
  kMotionFrontFlip = 5,
  kMotionOffensiveCrouch = 6,
  kMotionDefensiveCrouch = 7,
};

inline constexpr int kNumMotions = 8;
inline constexpr int kNumAttackOptions = 6;  // none + 5 attacks
inline constexpr int kNumPairActions = kNumMotions * kNumAttackOptions;  // 48

extern const char* const kMotionNames[kNumMotions];
extern const char* const kAttackNames[kNumAttackOptions];  // index 0 = "none"

struct EnvParams {
  MilliUnits arena_width = 10000;
  int max_hp = 100;
  int64_t round_time_limit = 5940;  // 99 s at 60 fps
  MilliUnits walk_speed = 50;
  MilliUnits creep_speed = 24;
  MilliUnits min_gap = 600;
  MilliUnits start_offset = 3000;  // p1 spawn; p2 mirrored
  int hit_stun = 9;
  int guard_stun = 2;
};

// Compiled-in move list plus the per-bot tuning scalars; both can be
// partially overridden from a JSON config file.
struct MoveTable {
  EnvParams params;
  std::vector<MoveSpec> moves;
  // bot name -> named scalar overrides, consumed by the bot scripts
  std::map<std::string, std::map<std::string, double>> bot_params;

  const MoveSpec& move(int move_id) const { return moves[static_cast<size_t>(move_id)]; }
  const MoveSpec* find(const std::string& name) const;

  int attack_move_id(int attack_idx) const;    // attack_idx in [1, 5]
  int combo_move_id(int combo_idx) const;      // combo_idx in [0, combo_count)
  int motion_move_id(int motion) const;        // jump / flips only
  int combo_count() const;

  double bot_param(const std::string& bot, const std::string& key, double fallback) const;
};

MoveTable default_move_table();

// Applies overrides from a JSON document (see README for the schema).
// Throws ConfigError on unknown keys or malformed values.
MoveTable load_move_table(const std::string& json_text);
MoveTable load_move_table_file(const std::string& path);

// Flat action indices: [0, 48) are (motion, attack) pairs in motion-major
// order, [48, 48 + combos) select a combo.
int action_count(const MoveTable& table);
ActionCommand command_from_index(const MoveTable& table, int action_idx);
int index_from_command(const MoveTable& table, const ActionCommand& cmd);

// Button marginal layout used by telemetry: 8 motions then the 5 attacks.
inline constexpr int kNumButtons = kNumMotions + (kNumAttackOptions - 1);
std::vector<std::string> button_names();

}  // namespace mf::sim

#endif  // MF_SIM_MOVES_HPP
