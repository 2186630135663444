"""Evaluate the alternative reading of each corrected formula next to the one the package uses.

Every row should show the package reading holding and the alternative failing.
"""

from qpv import closed_forms as cf
from qpv.hypergeom import outlook_binomial_identity
from qpv.recurrence import (
    check_recurrence,
    check_summand_recurrence,
    left_summand_recurrence,
    lg_right_recurrence,
    lg_transform_provider,
)


def first_bad(pairs):
    for key, (a, b) in pairs:
        try:
            if a() != b():
                return key
        except ArithmeticError:
            return key
    return None


def row(name, used, alt):
    u, a = first_bad(used), first_bad(alt)
    verdict = "ok" if u is None and a is not None else "UNEXPECTED"
    print(f"{name:<44} used: {'holds' if u is None else f'fails at {u}'}  "
          f"alternative: {'holds' if a is None else f'fails at {a}'}  [{verdict}]")


def main():
    D = 30
    for i in (1, 2):
        lhs = cf.gg_sums(i, "KAGAN_T35_LHS", D)
        row(f"regrouped GG double sums (i={i})",
            [(D, (lambda: lhs, lambda: cf.gg_sums(i, "KAGAN_T35_RHS", D)))],
            [(D, (lambda: lhs, lambda: cf.gg_sums(i, "KAGAN_T35_RHS", D, printed=True)))])

    Ns = range(0, 10)
    row("second LG transformation, right side",
        [(N, (lambda N=N: cf.lg_bounded(2, "T45_LHS2", N), lambda N=N: cf.lg_bounded(2, "T45_RHS2", N))) for N in Ns],
        [(N, (lambda N=N: cf.lg_bounded(2, "T45_LHS2", N), lambda N=N: cf.lg_bounded(2, "T45_RHS2", N, printed=True))) for N in Ns])

    row("bounded GG2 double sum at N=0",
        [(0, (lambda: cf.gg_bounded(2, "ALI_BDD", 0), lambda: cf.gg_bounded(2, "FIN_LHS", 0)))],
        [(0, (lambda: cf.gg_bounded(2, "ALI_BDD", 0, corrections=False), lambda: cf.gg_bounded(2, "FIN_LHS", 0)))])

    for i in (1, 2):
        p = lg_transform_provider(i, "RHS")
        ok = check_recurrence(p, lg_right_recurrence(i), -1, 12)
        alt = check_recurrence(p, lg_right_recurrence(i, printed=True), -1, 12)
        print(f"{f'LG order-2 recurrence (i={i})':<44} used: {len(ok.failures)} failures  "
              f"alternative: {len(alt.failures)} failures")

    fam = lambda m, n, N: cf.fin_gg_summand(1, "LHS", m, n, N)  # noqa: E731
    ok = check_summand_recurrence(fam, left_summand_recurrence(), range(6), range(0, 12, 2), range(10))
    alt = check_summand_recurrence(fam, left_summand_recurrence(printed=True), range(6), range(0, 12, 2), range(10))
    print(f"{'GG left summand recurrence sign':<44} used: {len(ok.failures)} failures  "
          f"alternative: {len(alt.failures)} failures")

    grid = [(m, n) for m in range(9) for n in range(m + 1)]
    row("q^2-binomial 2phi1 vs 4phi3 bottom parameter",
        [((m, n), (lambda m=m, n=n: outlook_binomial_identity(m, n)[0],
                   lambda m=m, n=n: outlook_binomial_identity(m, n)[1])) for m, n in grid],
        [((m, n), (lambda m=m, n=n: outlook_binomial_identity(m, n, printed=True)[0],
                   lambda m=m, n=n: outlook_binomial_identity(m, n, printed=True)[1])) for m, n in grid])


if __name__ == "__main__":
    main()
