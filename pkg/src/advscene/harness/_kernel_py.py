"""Pure-Python scene-stepping kernel (reference implementation).

The compiled kernel in _kernel_cy.pyx is a line-for-line twin; keep the
two in sync (same expressions, same evaluation order) so results stay
bit-identical across backends. Avoid `**`, math.hypot, and fused forms.
"""

from __future__ import annotations

import math

from ._kernel_common import (
    FAR_FUTURE,
    HAZ_PEDESTRIAN,
    HAZ_STATIC,
    IDX_COLLISION_PEDESTRIAN,
    IDX_COLLISION_STATIC,
    IDX_COLLISION_VEHICLE,
    IDX_OFF_LANE,
    IDX_OFF_ROAD,
    IDX_RED_LIGHT,
    IDX_ROUTE_DEVIATION,
    IDX_STOP_SIGN,
    IDX_TIMEOUT,
    KernelInputs,
    KernelResult,
)

BACKEND = "python"


def _wrap(a: float) -> float:
    while a > math.pi:
        a -= 2.0 * math.pi
    while a < -math.pi:
        a += 2.0 * math.pi
    return a


def simulate(inp: KernelInputs, control_fn=None) -> KernelResult:
    rx = [float(v) for v in inp.route_x]
    ry = [float(v) for v in inp.route_y]
    nseg = len(rx) - 1
    seg_len = [0.0] * nseg
    cum = [0.0] * (nseg + 1)
    for i in range(nseg):
        dx = rx[i + 1] - rx[i]
        dy = ry[i + 1] - ry[i]
        seg_len[i] = math.sqrt(dx * dx + dy * dy)
        cum[i + 1] = cum[i] + seg_len[i]
    total_len = cum[nseg]

    nhaz = len(inp.haz_s)
    nlight = len(inp.light_s)
    nsign = len(inp.sign_s)

    x = rx[0]
    y = ry[0]
    heading = math.atan2(ry[1] - ry[0], rx[1] - rx[0])
    speed = inp.target_speed
    steer = 0.0

    seg_i = 0
    s = 0.0
    best_s = 0.0
    counts = [0] * 9
    traj: list[tuple[float, float, float, float, float]] = []

    seen_counter = 0
    stopped_steps = 0
    hold_timer = 0.0
    panic_timer = 0.0
    panic_fired = False
    collision_count = 0
    off_lane_in = False
    off_road_in = False
    route_dev_in = False
    captured = False
    aborted = ""

    haz_hit = [False] * nhaz
    light_passed = [False] * nlight
    light_decision = [-1] * nlight  # -1 unknown, 0 green at decision, 1 red
    sign_state = [0] * nsign  # 0 pending, 1 waiting at line, 2 satisfied
    sign_wait_timer = [0.0] * nsign
    sign_min_speed = [FAR_FUTURE] * nsign
    sign_crossed = [False] * nsign
    unrecoverable = False

    dt = inp.dt
    tunnel_present = inp.tunnel_s0 <= inp.tunnel_s1
    step_i = 0

    while step_i < inp.max_steps:
        t = step_i * dt
        in_tunnel = tunnel_present and inp.tunnel_s0 <= s <= inp.tunnel_s1
        v = inp.v_open * inp.tunnel_factor if in_tunnel else inp.v_open
        sees = v >= inp.vt

        if step_i % inp.record_every == 0:
            traj.append((t, x, y, heading, speed))

        # lookahead bearing
        s_look = s + inp.lookahead
        if s_look >= total_len:
            lx = rx[nseg]
            ly = ry[nseg]
        else:
            li = seg_i
            while li < nseg - 1 and cum[li + 1] < s_look:
                li += 1
            frac = (s_look - cum[li]) / seg_len[li]
            lx = rx[li] + frac * (rx[li + 1] - rx[li])
            ly = ry[li] + frac * (ry[li + 1] - ry[li])
        bearing = math.atan2(ly - y, lx - x)
        herr = _wrap(bearing - heading)

        # --- controller -------------------------------------------------
        target = inp.target_speed
        if inp.round_s0 <= s <= inp.round_s1:
            target = inp.round_speed

        hazard_stop = FAR_FUTURE
        actor_in_sight = False
        for k in range(nhaz):
            if haz_hit[k]:
                continue
            if not (inp.haz_t0[k] <= t <= inp.haz_t1[k]):
                continue
            ds = inp.haz_s[k] - s
            if inp.haz_kind[k] == HAZ_STATIC:
                if sees and -2.0 <= ds <= inp.static_slow_zone:
                    if inp.static_slow_speed < target:
                        target = inp.static_slow_speed
                continue
            if 0.0 <= ds <= inp.sight_range:
                actor_in_sight = True
                cand = inp.haz_s[k] - inp.d_safe
                if cand < hazard_stop:
                    hazard_stop = cand
        if sees and actor_in_sight:
            seen_counter += 1
        else:
            seen_counter = 0

        stop_target = FAR_FUTURE
        if seen_counter > inp.reaction_steps and hazard_stop < stop_target:
            stop_target = hazard_stop

        for i in range(nlight):
            if light_passed[i]:
                continue
            ds = inp.light_s[i] - s
            red_now = inp.light_r0[i] <= t <= inp.light_r1[i]
            if light_decision[i] < 0 and ds <= inp.decision_dist:
                light_decision[i] = 1 if red_now else 0
            if red_now and inp.light_miss[i] == 0 and 0.0 <= ds <= inp.red_sight:
                if light_decision[i] != 0:
                    cand = inp.light_s[i] - inp.stop_at
                    if cand < stop_target:
                        stop_target = cand

        sign_waiting = False
        for j in range(nsign):
            if sign_state[j] == 2:
                continue
            ds = inp.sign_s[j] - s
            if -1.0 <= ds <= inp.sign_zone and speed < sign_min_speed[j]:
                sign_min_speed[j] = speed
            if sign_state[j] == 1:
                sign_wait_timer[j] -= dt
                if sign_wait_timer[j] <= 0.0:
                    sign_state[j] = 2
                else:
                    sign_waiting = True
                continue
            if sees and 0.0 <= ds <= inp.red_sight:
                if speed < 0.3 and ds <= inp.sign_zone:
                    sign_state[j] = 1
                    sign_wait_timer[j] = inp.sign_wait
                    sign_waiting = True
                else:
                    cand = inp.sign_s[j] - inp.stop_at
                    if cand < stop_target:
                        stop_target = cand

        if inp.panic != 0 and not panic_fired and in_tunnel:
            panic_fired = True
            panic_timer = inp.panic_duration

        if control_fn is not None:
            res = control_fn(
                step_i, t, x, y, heading, speed, s, v,
                hazard_stop, in_tunnel, stop_target, herr,
            )
            if res is None:
                aborted = "protocol_error"
                break
            throttle, brake, steer_cmd = res
            if not (
                math.isfinite(throttle) and math.isfinite(brake) and math.isfinite(steer_cmd)
            ):
                aborted = "protocol_error"
                break
            throttle = min(1.0, max(0.0, throttle))
            brake = min(1.0, max(0.0, brake))
            steer = min(inp.max_steer, max(-inp.max_steer, steer_cmd))
        else:
            if hold_timer > 0.0:
                hold_timer -= dt
                throttle = 0.0
                brake = 1.0
            elif panic_timer > 0.0:
                panic_timer -= dt
                throttle = 0.0
                brake = 1.0
            elif sign_waiting:
                throttle = 0.0
                brake = 1.0
            else:
                gap = stop_target - s
                stopping = speed * speed / (2.0 * inp.b_max * inp.brake_eff)
                if gap <= stopping + 0.5:
                    throttle = 0.0
                    brake = 1.0
                elif speed > target + 0.5:
                    throttle = 0.0
                    brake = 0.3
                else:
                    throttle = inp.k_speed * (target - speed)
                    if throttle < 0.0:
                        throttle = 0.0
                    elif throttle > 1.0:
                        throttle = 1.0
                    brake = 0.0
            steer = inp.k_steer * herr
            if steer > inp.max_steer:
                steer = inp.max_steer
            elif steer < -inp.max_steer:
                steer = -inp.max_steer

        # --- dynamics (pinned order) -------------------------------------
        heading = _wrap(heading + (speed / inp.wheelbase) * math.tan(steer) * dt)
        x = x + speed * math.cos(heading) * dt
        y = y + speed * math.sin(heading) * dt
        speed = speed + (throttle * inp.a_max - brake * inp.b_max) * dt
        if speed < 0.0:
            speed = 0.0
        step_i += 1

        if not (math.isfinite(x) and math.isfinite(y) and math.isfinite(heading)):
            aborted = "diverged"
            break

        # --- projection (monotone) ---------------------------------------
        prev_s = s
        while True:
            ax = rx[seg_i]
            ay = ry[seg_i]
            dx = rx[seg_i + 1] - ax
            dy = ry[seg_i + 1] - ay
            sl = seg_len[seg_i]
            tpar = ((x - ax) * dx + (y - ay) * dy) / (sl * sl)
            if tpar > 1.0 and seg_i < nseg - 1:
                seg_i += 1
                continue
            break
        if tpar < 0.0:
            tpar = 0.0
        elif tpar > 1.0:
            tpar = 1.0
        s = cum[seg_i] + tpar * seg_len[seg_i]
        if s < prev_s:
            s = prev_s
        if s > best_s:
            best_s = s
        px = ax + tpar * dx
        py = ay + tpar * dy
        ex = x - px
        ey = y - py
        lateral = math.sqrt(ex * ex + ey * ey)

        # --- infractions --------------------------------------------------
        for k in range(nhaz):
            if haz_hit[k]:
                continue
            if not (inp.haz_t0[k] <= t <= inp.haz_t1[k]):
                continue
            dist = inp.haz_s[k] - s
            if dist < 0.0:
                dist = -dist
            if dist > inp.collide_radius:
                continue
            kind = inp.haz_kind[k]
            if kind == HAZ_STATIC:
                if speed <= inp.static_safe_speed:
                    continue
                counts[IDX_COLLISION_STATIC] += 1
            elif kind == HAZ_PEDESTRIAN:
                counts[IDX_COLLISION_PEDESTRIAN] += 1
            else:
                counts[IDX_COLLISION_VEHICLE] += 1
            haz_hit[k] = True
            speed = 0.0
            hold_timer = inp.post_collision_hold
            kick = inp.collision_kick if (collision_count & 1) == 0 else -inp.collision_kick
            collision_count += 1
            heading = _wrap(heading + kick)
            herr_after = _wrap(bearing - heading)
            if herr_after > math.pi / 2.0 or herr_after < -math.pi / 2.0:
                counts[IDX_TIMEOUT] += 1
                captured = False
                step_i = inp.max_steps + 1  # unrecoverable: end scene
            break  # at most one collision per step

        if step_i > inp.max_steps:
            break

        for i in range(nlight):
            if light_passed[i]:
                continue
            if prev_s < inp.light_s[i] <= s:
                light_passed[i] = True
                red_now = inp.light_r0[i] <= t <= inp.light_r1[i]
                if red_now and light_decision[i] == 1:
                    counts[IDX_RED_LIGHT] += 1

        for j in range(nsign):
            if sign_state[j] == 2 and sign_min_speed[j] == FAR_FUTURE:
                continue
            if prev_s < inp.sign_s[j] <= s:
                if sign_min_speed[j] > inp.sign_cross_speed:
                    counts[IDX_STOP_SIGN] += 1
                sign_state[j] = 2
                sign_min_speed[j] = FAR_FUTURE

        if lateral > inp.road_half:
            if not off_road_in:
                counts[IDX_OFF_ROAD] += 1
                off_road_in = True
        else:
            off_road_in = False
        if lateral > inp.lane_half:
            if not off_lane_in:
                counts[IDX_OFF_LANE] += 1
                off_lane_in = True
        else:
            off_lane_in = False
        if lateral > inp.route_dev:
            if not route_dev_in:
                counts[IDX_ROUTE_DEVIATION] += 1
                route_dev_in = True
        else:
            route_dev_in = False

        # timeout: stopped with no external reason
        if speed < inp.stop_eps:
            stopped_steps += 1
        else:
            stopped_steps = 0
        if stopped_steps * dt >= inp.timeout_s:
            exempt = False
            for i in range(nlight):
                if not light_passed[i] and 0.0 <= inp.light_s[i] - s <= inp.stopline_zone:
                    exempt = True
                    break
            if not exempt:
                for j in range(nsign):
                    if sign_state[j] != 2 and 0.0 <= inp.sign_s[j] - s <= inp.stopline_zone:
                        exempt = True
                        break
            if not exempt:
                for k in range(nhaz):
                    if haz_hit[k]:
                        continue
                    if not (inp.haz_t0[k] <= t <= inp.haz_t1[k]):
                        continue
                    ds = inp.haz_s[k] - s
                    if -2.0 <= ds <= inp.hazard_zone:
                        exempt = True
                        break
            if not exempt:
                counts[IDX_TIMEOUT] += 1
                break
            stopped_steps = 0

        # completion
        fx = x - rx[nseg]
        fy = y - ry[nseg]
        if math.sqrt(fx * fx + fy * fy) <= inp.capture_radius:
            captured = True
            break

    steps_taken = min(step_i, inp.max_steps)
    return KernelResult(
        counts=counts,
        best_s=best_s,
        total_len=total_len,
        captured=captured,
        steps=steps_taken,
        end_x=x,
        end_y=y,
        end_heading=heading,
        end_speed=speed,
        traj=traj,
        aborted=aborted,
    )
