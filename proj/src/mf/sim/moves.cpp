#include "mf/sim/moves.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "mf/errors.hpp"
#include "json.hpp"

namespace mf::sim {

const char* const kMotionNames[kNumMotions] = {
    "defense",   "forward",    "jump",             "crouch",
    "back_flip", "front_flip", "offensive_crouch", "defensive_crouch",
};

const char* const kAttackNames[kNumAttackOptions] = {
    "none", "light_punch", "medium_punch", "heavy_punch", "light_kick", "heavy_kick",
};

namespace {

MoveSpec motion_move(int id, const char* name, int s, int a, int r, MilliUnits drift, bool airborne) {
  MoveSpec m;
  m.move_id = id;
  m.name = name;
  m.kind = MoveKind::Motion;
  m.startup_frames = s;
  m.active_frames = a;
  m.recovery_frames = r;
  m.drift = drift;
  m.airborne = airborne;
  return m;
}

MoveSpec attack_move(int id, const char* name, MoveKind kind, int s, int a, int r, int dmg,
                     MilliUnits reach, MilliUnits kb, int whiff, MilliUnits lunge = 0) {
  MoveSpec m;
  m.move_id = id;
  m.name = name;
  m.kind = kind;
  m.startup_frames = s;
  m.active_frames = a;
  m.recovery_frames = r;
  m.damage = dmg;
  m.reach = reach;
  m.knockback = kb;
  m.self_stun_on_whiff = whiff;
  m.lunge = lunge;
  return m;
}

// All speeds, reaches and knockbacks are even milli-unit counts: positions
// then stay even forever and the symmetric separation push never truncates.
std::vector<MoveSpec> default_moves() {
  std::vector<MoveSpec> v;
  v.push_back(motion_move(0, "jump", 3, 12, 4, 20, true));
  v.push_back(motion_move(1, "back_flip", 1, 10, 3, -46, false));
  v.push_back(motion_move(2, "front_flip", 1, 10, 3, 46, false));
  v.push_back(attack_move(3, "light_punch", MoveKind::Attack, 3, 2, 6, 4, 1000, 150, 2));
  v.push_back(attack_move(4, "medium_punch", MoveKind::Attack, 4, 2, 9, 6, 1100, 200, 2));
  v.push_back(attack_move(5, "heavy_punch", MoveKind::Attack, 6, 3, 12, 9, 1250, 300, 3));
  v.push_back(attack_move(6, "light_kick", MoveKind::Attack, 4, 2, 8, 5, 1300, 200, 2));
  v.push_back(attack_move(7, "heavy_kick", MoveKind::Attack, 8, 3, 14, 10, 1550, 350, 4));
  v.push_back(attack_move(8, "twin_fang", MoveKind::Combo, 10, 4, 18, 14, 1350, 400, 6));
  v.push_back(attack_move(9, "dragon_lance", MoveKind::Combo, 12, 3, 20, 13, 2300, 500, 6));
  v.push_back(attack_move(10, "meteor_drop", MoveKind::Combo, 14, 4, 22, 18, 1500, 600, 8));
  v.push_back(attack_move(11, "lunge_strike", MoveKind::Combo, 9, 3, 17, 12, 1200, 440, 6, 60));
  return v;
}

void validate_table(const MoveTable& t) {
  int max_attack_damage = 0;
  int max_attack_total = 0;
  for (const MoveSpec& m : t.moves) {
    if (m.startup_frames < 0 || m.active_frames < 0 || m.recovery_frames < 0 || m.damage < 0 ||
        m.self_stun_on_whiff < 0) {
      throw ConfigError("move '" + m.name + "': frame counts and damage must be >= 0");
    }
    if (m.kind == MoveKind::Attack) {
      max_attack_damage = std::max(max_attack_damage, m.damage);
      max_attack_total = std::max(max_attack_total, m.total_frames());
    }
  }
  for (const MoveSpec& m : t.moves) {
    if (m.kind == MoveKind::Combo &&
        (m.damage <= max_attack_damage || m.total_frames() <= max_attack_total)) {
      throw ConfigError("combo '" + m.name +
                        "' must exceed every single attack in damage and total frames");
    }
  }
  if (t.params.arena_width <= 2 * t.params.min_gap) throw ConfigError("arena too narrow");
  if (t.params.max_hp <= 0) throw ConfigError("max_hp must be positive");
  if (t.params.round_time_limit <= 0) throw ConfigError("round_time_limit must be positive");
}

// Nearest even milli-unit count, keeping the parity invariant noted above.
MilliUnits to_even_mu(double arena_units) {
  return static_cast<MilliUnits>(2 * std::llround(arena_units * 500.0));
}

}  // namespace

const MoveSpec* MoveTable::find(const std::string& name) const {
  for (const MoveSpec& m : moves) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

int MoveTable::attack_move_id(int attack_idx) const {
  int seen = 0;
  for (const MoveSpec& m : moves) {
    if (m.kind == MoveKind::Attack && ++seen == attack_idx) return m.move_id;
  }
  throw InvalidArgumentError("attack index out of range: " + std::to_string(attack_idx));
}

int MoveTable::combo_move_id(int combo_idx) const {
  int seen = 0;
  for (const MoveSpec& m : moves) {
    if (m.kind == MoveKind::Combo && seen++ == combo_idx) return m.move_id;
  }
  throw InvalidArgumentError("combo index out of range: " + std::to_string(combo_idx));
}

int MoveTable::motion_move_id(int motion) const {
  switch (motion) {
    case kMotionJump: return find("jump")->move_id;
    case kMotionBackFlip: return find("back_flip")->move_id;
    case kMotionFrontFlip: return find("front_flip")->move_id;
    default: throw InvalidArgumentError("motion has no committed move: " + std::to_string(motion));
  }
}

int MoveTable::combo_count() const {
  int n = 0;
  for (const MoveSpec& m : moves) {
    if (m.kind == MoveKind::Combo) ++n;
  }
  return n;
}

double MoveTable::bot_param(const std::string& bot, const std::string& key, double fallback) const {
  auto it = bot_params.find(bot);
  if (it == bot_params.end()) return fallback;
  auto jt = it->second.find(key);
  return jt == it->second.end() ? fallback : jt->second;
}

MoveTable default_move_table() {
  MoveTable t;
  t.moves = default_moves();
  validate_table(t);
  return t;
}

MoveTable load_move_table(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("env config: ") + e.what());
  }
  MoveTable t = default_move_table();
  for (const auto& [key, value] : doc.items()) {
    if (key == "arena_width") {
      t.params.arena_width = to_even_mu(value.get<double>());
    } else if (key == "max_hp") {
      t.params.max_hp = value.get<int>();
    } else if (key == "round_time_limit") {
      t.params.round_time_limit = value.get<int64_t>();
    } else if (key == "walk_speed") {
      t.params.walk_speed = to_even_mu(value.get<double>());
    } else if (key == "creep_speed") {
      t.params.creep_speed = to_even_mu(value.get<double>());
    } else if (key == "min_gap") {
      t.params.min_gap = to_even_mu(value.get<double>());
    } else if (key == "start_offset") {
      t.params.start_offset = to_even_mu(value.get<double>());
    } else if (key == "hit_stun") {
      t.params.hit_stun = value.get<int>();
    } else if (key == "guard_stun") {
      t.params.guard_stun = value.get<int>();
    } else if (key == "moves") {
      for (const auto& entry : value) {
        if (!entry.contains("name")) throw ConfigError("env config: move entry without name");
        const std::string name = entry.at("name").get<std::string>();
        const MoveSpec* found = t.find(name);
        if (!found) throw ConfigError("env config: unknown move '" + name + "'");
        MoveSpec& m = t.moves[static_cast<size_t>(found->move_id)];
        for (const auto& [mk, mv] : entry.items()) {
          if (mk == "name") continue;
          if (mk == "startup") m.startup_frames = mv.get<int>();
          else if (mk == "active") m.active_frames = mv.get<int>();
          else if (mk == "recovery") m.recovery_frames = mv.get<int>();
          else if (mk == "damage") m.damage = mv.get<int>();
          else if (mk == "reach") m.reach = to_even_mu(mv.get<double>());
          else if (mk == "knockback") m.knockback = to_even_mu(mv.get<double>());
          else if (mk == "whiff_stun") m.self_stun_on_whiff = mv.get<int>();
          else if (mk == "lunge") m.lunge = to_even_mu(mv.get<double>());
          else if (mk == "drift") m.drift = to_even_mu(mv.get<double>());
          else throw ConfigError("env config: unknown move key '" + mk + "'");
        }
      }
    } else if (key == "bots") {
      for (const auto& [bot, params] : value.items()) {
        for (const auto& [pk, pv] : params.items()) {
          t.bot_params[bot][pk] = pv.get<double>();
        }
      }
    } else {
      throw ConfigError("env config: unknown key '" + key + "'");
    }
  }
  validate_table(t);
  return t;
}

MoveTable load_move_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open env config: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_move_table(ss.str());
}

int action_count(const MoveTable& table) { return kNumPairActions + table.combo_count(); }

ActionCommand command_from_index(const MoveTable& table, int action_idx) {
  if (action_idx < 0 || action_idx >= action_count(table)) {
    throw InvalidArgumentError("action index out of range: " + std::to_string(action_idx));
  }
  ActionCommand cmd;
  if (action_idx < kNumPairActions) {
    cmd.motion_idx = action_idx / kNumAttackOptions;
    cmd.attack_idx = action_idx % kNumAttackOptions;
  } else {
    cmd.combo_idx = action_idx - kNumPairActions;
  }
  return cmd;
}

int index_from_command(const MoveTable& table, const ActionCommand& cmd) {
  if (cmd.combo_idx) {
    if (*cmd.combo_idx < 0 || *cmd.combo_idx >= table.combo_count()) {
      throw InvalidArgumentError("combo index out of range");
    }
    return kNumPairActions + *cmd.combo_idx;
  }
  if (cmd.motion_idx < 0 || cmd.motion_idx >= kNumMotions || cmd.attack_idx < 0 ||
      cmd.attack_idx >= kNumAttackOptions) {
    throw InvalidArgumentError("motion/attack index out of range");
  }
  return cmd.motion_idx * kNumAttackOptions + cmd.attack_idx;
}

std::vector<std::string> button_names() {
  std::vector<std::string> names;
  for (int m = 0; m < kNumMotions; ++m) names.emplace_back(kMotionNames[m]);
  for (int a = 1; a < kNumAttackOptions; ++a) names.emplace_back(kAttackNames[a]);
  return names;
}

}  // namespace mf::sim
