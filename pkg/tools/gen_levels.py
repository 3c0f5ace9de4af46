"""Generate src/mdkin/_levels_gen.py.

Derives, per kinematic level, the constraint Jacobians A = dF/d(input),
B = dF/d(output) together with their first and second total time
derivatives, and, per explicit forward map, the value, Jacobian, full
first time derivative and the bias terms of the second and third time
derivatives (the parts not containing the highest-order state rate).

The output module is committed; this script is only rerun when the
closed-form constraint equations change.  Generated code calls sin/cos/
sqrt/... through mdkin.multidual, so the same functions evaluate on
floats and on MultiDual jets.
"""

from pathlib import Path

import sympy as sp

GEOM = sp.symbols("l l0 l1 l2 l3 l4", positive=True)
L, L0, L1, L2, L3, L4 = GEOM

HEADER = '''"""Closed-form constraint Jacobians and forward-map derivative packs.

Generated by tools/gen_levels.py; do not edit by hand.

Every level has a 3-component constraint F(input, output) = 0 with
A = dF/d(input) and B = dF/d(output), so the level Jacobian mapping
input rates to output rates is J = -B^-1 A.  The *_d1 / *_d2 variants
are total time derivatives of the matrices, taking the state rates as
extra arguments.  Forward maps expose value, Jacobian and the bias terms
bias2 (second time derivative with zero state acceleration) and bias3
(third time derivative with zero state jerk).

All functions accept float or MultiDual scalars.
"""
# flake8: noqa: E501

from .multidual import sin, cos, sqrt, atan2, asin
'''


def half_pow_fix(expr):
    """Rewrite half-integer powers through sqrt so jets can evaluate them."""
    # e.exp = p/2 with p odd; sqrt(base)**p
    def bad(e):
        return (e.is_Pow and e.exp.is_Rational and e.exp.q == 2
                and abs(e.exp) != sp.Rational(1, 2)
                and abs(e.exp) != sp.Rational(-1, 2))

    return expr.replace(
        bad, lambda e: sp.Pow(sp.sqrt(e.base), sp.Integer(e.exp.p),
                              evaluate=False))


def emit_exprs(exprs, indent="    "):
    """Common-subexpression-eliminated python lines + result expressions."""
    reps, reduced = sp.cse(exprs, optimizations="basic")
    lines = []
    for sym, val in reps:
        lines.append(f"{indent}{sym} = {val}")
    outs = [str(e) for e in reduced]
    return lines, outs


def emit_matrix_function(name, mat, args_sig, unpack_lines):
    rows, cols = mat.shape
    exprs = [mat[i, j] for i in range(rows) for j in range(cols)]
    lines, outs = emit_exprs(exprs)
    body = [f"def {name}({args_sig}):"]
    body += unpack_lines
    body += lines
    it = iter(outs)
    rows_src = []
    for i in range(rows):
        rows_src.append("(" + ", ".join(next(it) for _ in range(cols)) + ")")
    body.append("    return (" + ",\n            ".join(rows_src) + ")")
    return "\n".join(body) + "\n\n"


def emit_vector_function(name, vec, args_sig, unpack_lines):
    lines, outs = emit_exprs(list(vec))
    body = [f"def {name}({args_sig}):"]
    body += unpack_lines
    body += lines
    body.append("    return (" + ", ".join(outs) + ")")
    return "\n".join(body) + "\n\n"


def dt(expr, dmap):
    out = sp.S.Zero
    for s, sd in dmap.items():
        if expr.has(s):
            out += sp.diff(expr, s) * sd
    return out


def dt_matrix(mat, dmap):
    return mat.applyfunc(lambda e: dt(e, dmap))


def state_syms(names, suffix=""):
    return sp.symbols(" ".join(n + suffix for n in names))


def gen_level(name, in_names, out_names, f_builder):
    """Source for A, B and their first/second total time derivatives."""
    s = list(state_syms(in_names)) + list(state_syms(out_names))
    sd = list(state_syms(in_names, "_d1")) + list(state_syms(out_names, "_d1"))
    sdd = list(state_syms(in_names, "_d2")) + list(state_syms(out_names,
                                                              "_d2"))
    n_in = len(in_names)
    f = sp.Matrix(f_builder(s[:n_in], s[n_in:]))
    a = f.jacobian(s[:n_in])
    b = f.jacobian(s[n_in:])
    d1 = dict(zip(s, sd))
    d2 = {**d1, **dict(zip(sd, sdd))}

    unpack_s = [f"    {', '.join(map(str, s))} = s"]
    unpack_g = ["    l, l0, l1, l2, l3, l4 = g"]
    unpack_sd = [f"    {', '.join(map(str, sd))} = sd"]
    unpack_sdd = [f"    {', '.join(map(str, sdd))} = sdd"]

    src = ""
    for tag, mat in (("A", a), ("B", b)):
        src += emit_matrix_function(f"{name}_{tag}", mat, "s, g",
                                    unpack_s + unpack_g)
        m1 = dt_matrix(mat, d1)
        src += emit_matrix_function(f"{name}_{tag}_d1", m1, "s, sd, g",
                                    unpack_s + unpack_sd + unpack_g)
        m2 = dt_matrix(m1, d2)
        src += emit_matrix_function(f"{name}_{tag}_d2", m2, "s, sd, sdd, g",
                                    unpack_s + unpack_sd + unpack_sdd
                                    + unpack_g)
    return src


def gen_map(name, in_names, f_builder):
    s = list(state_syms(in_names))
    sd = list(state_syms(in_names, "_d1"))
    sdd = list(state_syms(in_names, "_d2"))
    f = sp.Matrix(f_builder(s))
    jac = f.jacobian(s)
    d1 = dict(zip(s, sd))
    d2 = {**d1, **dict(zip(sd, sdd))}
    fd1 = f.applyfunc(lambda e: dt(e, d1))
    fd2 = fd1.applyfunc(lambda e: dt(e, d2))
    bias2 = fd2.subs({x: 0 for x in sdd}, simultaneous=True)
    # third derivative with s''' = 0: differentiate fd2 treating sdd const
    fd3_bias = fd2.applyfunc(lambda e: dt(e, d2))

    unpack_s = [f"    {', '.join(map(str, s))} = s"]
    unpack_g = ["    l, l0, l1, l2, l3, l4 = g"]
    unpack_sd = [f"    {', '.join(map(str, sd))} = sd"]
    unpack_sdd = [f"    {', '.join(map(str, sdd))} = sdd"]

    src = emit_vector_function(f"{name}_val", f, "s, g", unpack_s + unpack_g)
    src += emit_matrix_function(f"{name}_jac", jac, "s, g",
                                unpack_s + unpack_g)
    src += emit_vector_function(f"{name}_d1", fd1, "s, sd, g",
                                unpack_s + unpack_sd + unpack_g)
    src += emit_vector_function(f"{name}_bias2", bias2, "s, sd, g",
                                unpack_s + unpack_sd + unpack_g)
    src += emit_vector_function(f"{name}_bias3", fd3_bias, "s, sd, sdd, g",
                                unpack_s + unpack_sd + unpack_sdd + unpack_g)
    return src


# ----- constraint residuals ------------------------------------------------

def f_rho_q(x, q):
    rho1, rho2, rho3 = x
    q1, q2, q3 = q
    w = (q2 - q1) / 2
    l1p = sp.sqrt(L1 ** 2 - w ** 2)
    l3p = sp.sqrt(L3 ** 2 - w ** 2)
    f1 = rho1 - (q1 + q2) / 2
    f2 = w ** 2 + (rho2 - L4) ** 2 - L1 ** 2
    f3 = ((l3p - L2 * sp.sin(q3) + l1p * sp.sin(rho3)) ** 2
          + (L2 * sp.cos(q3) - l1p * sp.cos(rho3)) ** 2 - L2 ** 2)
    return [f1, f2, f3]


def f_p_rho(p, rho):
    xp, yp, zp = p
    rho1, rho2, rho3 = rho
    return [xp + L0 - rho2 * sp.sin(rho3),
            yp - rho1,
            zp - rho2 * sp.cos(rho3)]


def f_rcm_p(rcm, p):
    psi, th, lins = rcm
    xp, yp, zp = p
    d = lins - L
    return [xp - d * sp.cos(psi) * sp.cos(th),
            yp - d * sp.sin(psi) * sp.cos(th),
            zp + d * sp.sin(th)]


def f_rcm_e(e, rcm):
    xe, ye, ze = e
    psi, th, lins = rcm
    return [xe - lins * sp.cos(psi) * sp.cos(th),
            ye - lins * sp.sin(psi) * sp.cos(th),
            ze + lins * sp.sin(th)]


def f_dq(u, w):
    u1, u2, lins = u
    rho1, rho2, u3 = w
    c1, s1 = (1 - u1 ** 2) / (1 + u1 ** 2), 2 * u1 / (1 + u1 ** 2)
    c2, s2 = (1 - u2 ** 2) / (1 + u2 ** 2), 2 * u2 / (1 + u2 ** 2)
    c3, s3 = (1 - u3 ** 2) / (1 + u3 ** 2), 2 * u3 / (1 + u3 ** 2)
    d = lins - L
    p1 = [d * c1 * c2, d * s1 * c2, -d * s2]
    p2 = [rho2 * s3 - L0, rho1, rho2 * c3]
    return [p1[i] - p2[i] for i in range(3)]


# ----- forward maps ---------------------------------------------------------

def m_e(s):
    psi, th, lins = s
    return [lins * sp.cos(psi) * sp.cos(th),
            lins * sp.sin(psi) * sp.cos(th),
            -lins * sp.sin(th)]


def m_p1(s):
    psi, th, lins = s
    d = lins - L
    return [d * sp.cos(psi) * sp.cos(th),
            d * sp.sin(psi) * sp.cos(th),
            -d * sp.sin(th)]


def m_p2(s):
    rho1, rho2, rho3 = s
    return [rho2 * sp.sin(rho3) - L0, rho1, rho2 * sp.cos(rho3)]


def main():
    src = HEADER + "\n\n"
    src += gen_level("rho_q", ["rho1", "rho2", "rho3"], ["q1", "q2", "q3"],
                     f_rho_q)
    src += gen_level("p_rho", ["xp", "yp", "zp"], ["rho1", "rho2", "rho3"],
                     f_p_rho)
    src += gen_level("rcm_p", ["psi", "th", "lins"], ["xp", "yp", "zp"],
                     f_rcm_p)
    src += gen_level("rcm_e", ["xe", "ye", "ze"], ["psi", "th", "lins"],
                     f_rcm_e)
    src += gen_level("dq", ["u1", "u2", "lins"], ["rho1", "rho2", "u3"],
                     f_dq)
    src += gen_map("map_e", ["psi", "th", "lins"], m_e)
    src += gen_map("map_p1", ["psi", "th", "lins"], m_p1)
    src += gen_map("map_p2", ["rho1", "rho2", "rho3"], m_p2)
    out = Path(__file__).resolve().parents[1] / "src/mdkin/_levels_gen.py"
    out.write_text(src)
    print(f"wrote {out} ({len(src.splitlines())} lines)")


if __name__ == "__main__":
    main()
