"""Transcribe a problem file into a Singular script for independent cross-checks.

The script is only written, never executed here.
"""

from __future__ import annotations

from .config import SamplingConfig, random_int, rng_for
from .poly import linear_form


def _ring_line(ring) -> str:
    vars_ = ",".join(ring.vars)
    if ring.weights and any(a != 1 for a in ring.weights):
        order = "ws(" + ",".join(str(a) for a in ring.weights) + ")"
    else:
        order = "ds"
    return f"ring r = 0, ({vars_}), {order};"


def emit_singular(pb, cfg: SamplingConfig | None = None) -> str:
    cfg = cfg or SamplingConfig()
    ring = pb.ring
    n = ring.n
    out = [
        "// generated by mixedbr; local ordering, rational coefficients",
        'LIB "sing.lib";',
        _ring_line(ring),
        "option(redSB);",
    ]
    if pb.f is not None:
        out += [f"poly f = {pb.f};", 'print("mu(f):"); vdim(std(jacob(f)));']
    X = pb.variety
    if X is not None:
        hs = list(X.equations)
        m = len(hs)
        if X.kind == "ambient":
            out += ["// ambient space: Theta_X is free of rank nvars", "matrix P = unitmat(nvars(r));"]
        elif X.kind == "origin":
            out += ["// origin: Theta_X = m*O^n", "matrix P = matrix(module(maxideal(1) * freemodule(nvars(r))));"]
        else:
            out.append("ideal H = " + ", ".join(str(h) for h in hs) + ";")
            cols = n + m * m
            out.append(f"// syzygy layout: {m} x {cols} matrix [Dh | blocks of h]")
            out.append(f"matrix Dh[{m}][{cols}];")
            out.append(f"for (int i = 1; i <= {m}; i++) {{")
            out.append(f"  for (int j = 1; j <= {n}; j++) {{ Dh[i, j] = diff(H[i], var(j)); }}")
            out.append(f"  for (int k = 1; k <= {m}; k++) {{ Dh[i, {n} + (i - 1) * {m} + k] = H[k]; }}")
            out.append("}")
            out.append("module S = syz(module(Dh));")
            out.append(f"matrix P = submat(matrix(S), 1..{n}, 1..ncols(matrix(S)));")
        out += ['print("Theta_X generators (columns):"); print(P);']
        if pb.f is not None:
            out += [
                "ideal JX;",
                "for (int c = 1; c <= ncols(P); c++) {",
                "  poly d = 0;",
                f"  for (int j = 1; j <= {n}; j++) {{ d = d + P[j, c] * diff(f, var(j)); }}",
                "  JX[c] = d;",
                "  kill d;",
                "}",
                'print("mu_X(f):"); vdim(std(JX));',
                'print("tau_X(f):"); vdim(std(JX + ideal(f)));',
            ]
    elif pb.f is not None and n >= 2:
        out.append("// mu^(i)(f) = colength(<x.grad f, l_1..l_{n-i}> + J(f, l)) for generic linear forms")
        for i in range(n - 1, 0, -1):
            rng = rng_for(cfg, "singular-mu*", i)
            forms = [linear_form(ring, [random_int(rng, cfg.height) for _ in range(n)]) for _ in range(n - i)]
            ls = ", ".join(str(l) for l in forms)
            k = n - i + 1
            out.append(f"ideal L{i} = {ls};")
            out.append(f"ideal M{i} = ideal(f), L{i};")
            out.append(f'print("mu^({i})(f):"); '
                       f"vdim(std(ideal(sum_euler(f)) + L{i} + minor(jacob(M{i}), {k})));")
        out.insert(4, "proc sum_euler(poly g) { poly e = 0; for (int j = 1; j <= nvars(basering); j++) "
                      "{ e = e + var(j) * diff(g, var(j)); } return(e); }")
    out.append("quit;")
    return "\n".join(out) + "\n"
