#ifndef MF_SIM_ENGINE_HPP
#define MF_SIM_ENGINE_HPP

#include "mf/sim/moves.hpp"
#include "mf/sim/types.hpp"

namespace mf::sim {

// Frame rules, applied simultaneously to both fighters so that mirroring the
// arena and swapping the players commutes with stepping:
//
//  1. Intent. Each fighter is read from the pre-frame state. A stunned
//     fighter does nothing (stun decrements this frame). A fighter inside a
//     move advances it by one frame; startup frames apply the move's lunge,
//     active frames its drift. An idle fighter obeys its command: a combo or
//     attack starts the corresponding move, otherwise the motion applies
//     (defense guards; forward walks; jump/back_flip/front_flip start their
//     motion moves; crouch holds position; offensive_crouch creeps forward;
//     defensive_crouch guards while creeping back). Combo > attack > motion.
//  2. Movement. Both displacements commit at once, clamped to the arena.
//     Fighters closer than min_gap are pushed apart by equal halves; a
//     fighter pinned on a wall transfers the remainder to the other.
//  3. Hits. A fighter whose move is in its active phase this frame contacts
//     the opponent when their distance is at most the move's reach, once per
//     move. Airborne (jump-active) defenders are missed entirely. A guarding
//     defender takes no damage but guard_stun frames of stun; otherwise the
//     defender loses the move's damage (hp floors at 0), suffers hit_stun,
//     has its own move cancelled and is knocked back, with wall shortfall
//     recoiling onto the attacker. Both fighters may trade on the same frame.
//  4. Completion. A move reaching its last frame ends now; if it never made
//     contact its self_stun_on_whiff lands as stun.
//  5. The frame counter advances; the round ends on a KO (draw if both drop
//     to 0 together) or at round_time_limit by remaining hp (draw on equal).
//
// step_frame consumes no randomness; scripted bots are the only consumers of
// GameState.rng.
GameState initial_state(const MoveTable& table, uint64_t seed);

FrameEvents step_frame(GameState& state, const ActionCommand& p1_cmd, const ActionCommand& p2_cmd,
                       const MoveTable& table);

MovePhase phase_at(const MoveSpec& spec, int age);

}  // namespace mf::sim

#endif  // MF_SIM_ENGINE_HPP
