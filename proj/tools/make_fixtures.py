"""Writes the bundled JSON fixtures under data/.

Permutation groups list their elements in lexicographic order of image
lists and compose as (gh)(x) = g(h(x)), matching the C++ catalog.
"""
import json
import pathlib

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def closure(gens):
    n = len(gens[0])
    ident = tuple(range(n))
    seen, frontier = {ident}, [ident]
    while frontier:
        nxt = []
        for p in frontier:
            for s in gens:
                q = tuple(s[p[x]] for x in range(n))
                if q not in seen:
                    seen.add(q)
                    nxt.append(q)
        frontier = nxt
    return sorted(seen)


def perm_group(gens):
    elems = closure(gens)
    index = {p: i for i, p in enumerate(elems)}
    n = len(elems[0])
    mul = [[index[tuple(a[b[x]] for x in range(n))] for b in elems] for a in elems]
    group = {"order": len(elems), "identity": 0, "mul": mul}
    action = {"points": n, "act": [list(p) for p in elems]}
    return group, action


def cyclic(n):
    group = {"order": n, "identity": 0, "mul": [[(a + b) % n for b in range(n)] for a in range(n)]}
    action = {"points": n, "act": [[(g + m) % n for m in range(n)] for g in range(n)]}
    return group, action


def coset_reps(action):
    act = action["act"]
    stab = [g for g in range(len(act)) if act[g][0] == 0]
    # gG0 is determined by g |> 0, so the minimal representative per image.
    reps = {}
    for g in range(len(act)):
        reps.setdefault(act[g][0], g)
    return sorted(reps.values()), stab


def write(name, doc):
    (DATA / name).write_text(json.dumps(doc, indent=2) + "\n")


def space_files(prefix, group, action):
    write(f"{prefix}_group.json", group)
    write(f"{prefix}_action.json", dict(action, group=f"{prefix}_group.json"))
    write(f"{prefix}_space.json", {"action": f"{prefix}_action.json", "origin": 0})


def or_delta(k):
    return [0] + [1] * (2**k - 1)


def main():
    DATA.mkdir(exist_ok=True)
    z4_group, z4_action = cyclic(4)
    d4_group, d4_action = perm_group([(1, 2, 3, 0), (0, 3, 2, 1)])
    cube_group, cube_action = perm_group([(2, 3, 1, 0, 4, 5), (0, 1, 4, 5, 3, 2)])
    space_files("z4", z4_group, z4_action)
    space_files("d4", d4_group, d4_action)
    space_files("cube", cube_group, cube_action)
    translate = tuple(4 * (c // 4) + (c % 4 + 1) % 4 for c in range(16))
    turn = tuple(4 * (c % 4) + (4 - c // 4) % 4 for c in range(16))
    torus_group, torus_action = perm_group([translate, turn])
    space_files("torus", torus_group, torus_action)

    write("z4_shift.json", {"space": "z4_space.json", "states": 2, "neighborhood": [1], "delta": [0, 1]})
    write("z4_shift_back.json", {"space": "z4_space.json", "states": 2, "neighborhood": [3], "delta": [0, 1]})
    write("z4_identity.json", {"space": "z4_space.json", "states": 2, "neighborhood": [0], "delta": [0, 1]})

    d4_reps, _ = coset_reps(d4_action)
    write("d4_or.json", {"space": "d4_space.json", "states": 2, "neighborhood": d4_reps, "delta": or_delta(4)})
    # Reads the neighbor at the second coset, which the reflection fixing
    # vertex 0 swaps with the fourth.
    projection = [(code >> 1) & 1 for code in range(16)]
    write("d4_projection.json",
          {"space": "d4_space.json", "states": 2, "neighborhood": d4_reps, "delta": projection})

    cube_reps, _ = coset_reps(cube_action)
    write("cube_or.json", {"space": "cube_space.json", "states": 2, "neighborhood": cube_reps,
                           "delta": or_delta(len(cube_reps))})

    # Von Neumann neighborhood: the origin and its four adjacent cells.
    torus_act = torus_action["act"]
    torus_reps = sorted(min(g for g in range(len(torus_act)) if torus_act[g][0] == cell)
                        for cell in (0, 1, 3, 4, 12))
    write("torus_or.json", {"space": "torus_space.json", "states": 2, "neighborhood": torus_reps,
                            "delta": or_delta(5)})

    # Z4 shift step Δ(c)(m) = c(m + 1); code = sum of c[i] * 2^i.
    def encode(c):
        return sum(v << i for i, v in enumerate(c))

    configs = [[(code >> i) & 1 for i in range(4)] for code in range(16)]
    write("z4_shift_map.json", {"space": "z4_space.json", "states": 2,
                                "table": [encode([c[(m + 1) % 4] for m in range(4)]) for c in configs]})
    write("z4_overwrite_map.json", {"space": "z4_space.json", "states": 2,
                                    "table": [encode([1] + c[1:]) for c in configs]})

    bad = dict(z4_action, group="z4_group.json")
    bad["act"] = [row[:] for row in z4_action["act"]]
    bad["act"][0] = [1, 0, 2, 3]
    write("bad_identity_action.json", bad)
    (DATA / "malformed.json").write_text('{\n  "order": 2,\n  "identity": 0\n  "mul": [[0, 1], [1, 0]]\n}\n')


if __name__ == "__main__":
    main()
