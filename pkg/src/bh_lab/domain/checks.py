from bh_lab.domain.model.check_spec import CheckSpec

# Verification campaigns exposed by `verify <name>`
CHECKS: list[CheckSpec] = [
    CheckSpec(
        "minkowski", "Minkowski exchange", True, True,
        "(sum_i (sum_j |a_ij|^p)^(q/p))^(1/q) <= (sum_j (sum_i |a_ij|^q)^(p/q))^(1/p) for 0<p<q",
    ),
    CheckSpec(
        "interpolation", "Mixed-norm interpolation", True, True,
        "||a||_q <= prod_k ||a||_{q(k)}^theta_k for q in the hull of the nodes",
    ),
    CheckSpec(
        "blei", "Blei inequality", True, True,
        "flat l_rho norm <= product over k-subsets of (s, q) block mixed norms",
    ),
    CheckSpec(
        "bh", "Bohnenblust-Hille variant", True, True,
        "(sum |a_i|^(2tm/(2+(m-1)t)))^((2+(m-1)t)/(2tm)) <= C_{m,t} ||U||",
    ),
    CheckSpec(
        "khinchine", "Khinchine constants", True, True,
        "||x||_2 <= A_p (E|sum eps_k x_k|^p)^(1/p) by exact enumeration or quadrature",
    ),
    CheckSpec(
        "summing", "Coincidence bound", True, False,
        "searched multiple (r,1)-summing sums at r = 2tm/(2+(m-1)t) stay below C_{m,t} ||U||",
    ),
    CheckSpec(
        "dps", "Mixed-exponent summing diagnostic", False, True,
        "block mixed norm of U(x_i) vs product of scalar block bounds (one-sided)",
    ),
    CheckSpec(
        "separate", "N-separately summing estimate", False, True,
        "searched (r_m,1)-summing sum vs A_r^(m-n) prod_S ||U^S||^(1/binom(m,n)) (one-sided)",
    ),
]
