"""End-to-end acceptance criteria.

Every check here is exact symbolic equality unless a numeric tolerance is
stated.  Each criterion prints one pass/fail line (run with ``pytest -s``
to see them all) and enforces its wall-clock budget.
"""

import random
import time
from fractions import Fraction

from gradedcover import (
    Atlas,
    Cyclotomic,
    GradedSignature,
    ParityMap,
    SuperMorphism,
    SuperRational,
    SuperSignature,
    check_cocycle,
    compose,
    decompose_oracle,
    identity_morphism,
    lift_atlas,
    lift_super,
    make_group,
)
from conftest import (
    random_group,
    random_parity,
    random_rational,
    random_signature,
    sum_components,
)


def _criterion(name: str, limit_s: float, body):
    start = time.perf_counter()
    failure = None
    try:
        body()
    except Exception as exc:  # report, then re-raise for pytest
        failure = exc
    elapsed = time.perf_counter() - start
    status = "PASS" if failure is None and elapsed < limit_s else "FAIL"
    print(f"[acceptance] {name}: {status} ({elapsed:.2f}s / {limit_s:.0f}s)")
    if failure is not None:
        raise failure
    assert elapsed < limit_s, f"{name} exceeded its {limit_s}s budget"


# -- shared constructions -------------------------------------------------


def projective_line_lift():
    g = make_group([2])
    pm = ParityMap.trivial(g)
    source = SuperSignature(even=["x"])
    target = SuperSignature(even=["y"])
    psi = SuperMorphism(
        source, target, {"y": 1 / SuperRational.variable(source, "x")}
    )
    return lift_super(psi, g, pm)


def projective_superspace_lift():
    g = make_group([4])
    pm = ParityMap(g, (1,))
    source = SuperSignature(even=["x"], odd=["xi"])
    target = SuperSignature(even=["y"], odd=["eta"])
    x = SuperRational.variable(source, "x")
    xi = SuperRational.variable(source, "xi")
    psi = SuperMorphism(source, target, {"y": 1 / x, "eta": xi / x})
    return lift_super(psi, g, pm)


def klein_xy_signature():
    klein = make_group([2, 2])
    pm = ParityMap(klein, (1, 1))
    return GradedSignature(
        klein,
        pm,
        even=[("x", klein.identity_character), ("y", klein.character((1, 1)))],
    )


def random_even_xy_polynomial(rng, sig, max_degree=6):
    x = SuperRational.variable(sig, "x")
    y = SuperRational.variable(sig, "y")
    total = SuperRational.zero(sig)
    for _ in range(rng.randint(1, 6)):
        coeff = Fraction(rng.randint(-5, 5), rng.choice([1, 2, 3]))
        term = SuperRational.constant(sig, coeff if coeff else 1)
        dx = rng.randint(0, max_degree)
        dy = rng.randint(0, max_degree - dx)
        total = total + term * x**dx * y**dy
    return total


def test_criterion_1_projective_line_golden():
    def body():
        lifted = projective_line_lift()
        cover = lifted.source
        x0 = SuperRational.variable(cover, "x@(0)")
        x1 = SuperRational.variable(cover, "x@(1)")
        delta = x0**2 - x1**2
        assert lifted.images["y@(0)"] == x0 / delta
        assert lifted.images["y@(1)"] == -x1 / delta

    _criterion("1 projective-line lift", 1.0, body)


def test_criterion_2_projective_superspace_golden():
    def body():
        lifted = projective_superspace_lift()
        cover = lifted.source
        x0 = SuperRational.variable(cover, "x@(0)")
        x2 = SuperRational.variable(cover, "x@(2)")
        s1 = SuperRational.variable(cover, "xi@(1)")
        s3 = SuperRational.variable(cover, "xi@(3)")
        delta = x0**2 - x2**2
        assert lifted.images["y@(0)"] == x0 / delta
        assert lifted.images["y@(2)"] == -x2 / delta
        assert lifted.images["eta@(1)"] == (x0 * s1 - x2 * s3) / delta
        assert lifted.images["eta@(3)"] == (x0 * s3 - x2 * s1) / delta

    _criterion("2 projective-superspace lift", 1.0, body)


def test_criterion_3_klein_split_into_even_and_odd():
    def body():
        rng = random.Random(2024)
        sig = klein_xy_signature()
        klein = sig.group
        x = SuperRational.variable(sig, "x")
        y = SuperRational.variable(sig, "y")
        half = Fraction(1, 2)
        chi_e = klein.identity_character
        chi_a, chi_b = klein.character((1, 0)), klein.character((0, 1))
        chi_ab = klein.character((1, 1))
        for _ in range(25):
            f = random_even_xy_polynomial(rng, sig)
            flipped = f.substitute({"x": x, "y": -y})
            parts = f.decompose()
            assert chi_a not in parts and chi_b not in parts
            assert parts.get(chi_e, SuperRational.zero(sig)) == (f + flipped) * half
            assert parts.get(chi_ab, SuperRational.zero(sig)) == (f - flipped) * half

    _criterion("3 Klein even/odd split (25 random)", 5.0, body)


def _is_prime_power(q: int) -> bool:
    for p in range(2, q + 1):
        if p * p > q:
            return True
        if q % p == 0:
            while q % p == 0:
                q //= p
            return q == 1
    return False


def _factor_multisets(bound: int):
    powers = [q for q in range(2, bound + 1) if _is_prime_power(q)]

    def rec(minimum, budget):
        yield ()
        for q in powers:
            if q < minimum or q > budget:
                continue
            for rest in rec(q, budget // q):
                yield (q,) + rest

    yield from rec(2, bound)


def test_criterion_4_character_orthogonality_up_to_64():
    def body():
        groups = sorted(set(_factor_multisets(64)))
        assert (2, 2) in groups and (64,) in groups and (2, 3, 4) in groups
        for factors in groups:
            g = make_group(factors)
            chars = g.characters()
            for element in g.elements():
                total = Cyclotomic.from_rational(0)
                for chi in chars:
                    total = total + chi(element)
                expected = g.order if element.is_identity() else 0
                assert total == expected, (factors, element)

    _criterion("4 character orthogonality, all groups of order <= 64", 30.0, body)


def test_criterion_5_oracle_equivalence():
    def body():
        rng = random.Random(555)
        for _ in range(100):
            grp = random_group(rng, max_order=12)
            sig = random_signature(rng, grp, random_parity(rng, grp))
            f = random_rational(rng, sig, max_terms=3, max_degree=4)
            assert f.decompose() == decompose_oracle(f)

    _criterion("5 averaging oracle equivalence (100 random)", 60.0, body)


def test_criterion_6_reconstruction_equivariance_idempotence():
    def body():
        rng = random.Random(606)
        for _ in range(100):
            grp = random_group(rng, max_order=12)
            sig = random_signature(rng, grp, random_parity(rng, grp))
            f = random_rational(rng, sig, max_terms=3, max_degree=4)
            parts = f.decompose()
            assert sum_components(parts, sig) == f
            for chi, part in parts.items():
                for g in grp.elements():
                    assert part.act(g) == part * chi(g)
                again = part.decompose()
                assert set(again) == {chi} and again[chi] == part

    _criterion("6 reconstruction/equivariance/idempotence (100 random)", 60.0, body)


def test_criterion_7_lifting_is_functorial():
    def body():
        rng = random.Random(707)
        configs = [
            (make_group([4]), (1,)),
            (make_group([2, 2]), (1, 1)),
            (make_group([2]), (0,)),
        ]
        from conftest import random_polynomial_morphism

        for _ in range(25):
            grp, bits = rng.choice(configs)
            pm = ParityMap(grp, bits)
            has_odd = any(pm(chi) == 1 for chi in grp.characters())
            odd_names = lambda k: [f"s{k}", f"t{k}"] if has_odd else []
            sigs = [
                SuperSignature(even=[f"a{k}", f"b{k}"], odd=odd_names(k))
                for k in range(3)
            ]
            psi1 = random_polynomial_morphism(rng, sigs[0], sigs[1])
            psi2 = random_polynomial_morphism(rng, sigs[1], sigs[2])
            direct = lift_super(compose(psi2, psi1), grp, pm)
            staged = compose(lift_super(psi2, grp, pm), lift_super(psi1, grp, pm))
            assert direct == staged
            assert lift_super(identity_morphism(sigs[0]), grp, pm).is_identity()

    _criterion("7 lift functoriality (25 random pairs)", 30.0, body)


def _projective_line_atlas():
    x_chart = SuperSignature(even=["x"])
    y_chart = SuperSignature(even=["y"])
    x = SuperRational.variable(x_chart, "x")
    y = SuperRational.variable(y_chart, "y")
    return Atlas(
        charts={"0": x_chart, "1": y_chart},
        transitions={
            ("0", "1"): SuperMorphism(x_chart, y_chart, {"y": 1 / x}),
            ("1", "0"): SuperMorphism(y_chart, x_chart, {"x": 1 / y}),
        },
    )


def _random_shear_atlas(rng):
    charts = {
        cid: SuperSignature(even=[f"u{cid}", f"v{cid}"], odd=[f"p{cid}", f"q{cid}"])
        for cid in ("0", "1", "2")
    }
    params = {cid: tuple(rng.randint(-3, 3) for _ in range(3)) for cid in charts}

    def shear(a, b, c1, c2, c3):
        src, dst = charts[a], charts[b]
        u = SuperRational.variable(src, f"u{a}")
        v = SuperRational.variable(src, f"v{a}")
        p = SuperRational.variable(src, f"p{a}")
        q = SuperRational.variable(src, f"q{a}")
        return SuperMorphism(
            src,
            dst,
            {
                f"u{b}": u + c1 * v**2 + c3 * p * q,
                f"v{b}": v,
                f"p{b}": p + c2 * v * q,
                f"q{b}": q,
            },
        )

    transitions = {}
    for a in charts:
        for b in charts:
            if a != b:
                diff = tuple(x - y for x, y in zip(params[a], params[b]))
                transitions[(a, b)] = shear(a, b, *diff)
    return Atlas(charts=charts, transitions=transitions)


def test_criterion_8_cocycle_suite():
    def body():
        g2 = make_group([2])
        pm2 = ParityMap.trivial(g2)
        atlas = _projective_line_atlas()
        assert check_cocycle(atlas).ok
        lifted = lift_atlas(atlas, g2, pm2)
        assert check_cocycle(lifted).ok

        x_chart = SuperSignature(even=["x"])
        y_chart = SuperSignature(even=["y"])
        x = SuperRational.variable(x_chart, "x")
        y = SuperRational.variable(y_chart, "y")
        broken = Atlas(
            charts={"1": x_chart, "2": y_chart},
            transitions={
                ("1", "2"): SuperMorphism(x_chart, y_chart, {"y": 1 / x}),
                ("2", "1"): SuperMorphism(y_chart, x_chart, {"x": 1 / y + 1}),
            },
        )
        report = check_cocycle(broken)
        assert not report.ok
        named = {f.charts for f in report.failures}
        assert ("1", "2") in named or ("2", "1") in named

        rng = random.Random(808)
        shear_atlas = _random_shear_atlas(rng)
        assert check_cocycle(shear_atlas).ok
        g4 = make_group([4])
        lifted_shear = lift_atlas(shear_atlas, g4, ParityMap(g4, (1,)))
        assert check_cocycle(lifted_shear).ok

    _criterion("8 cocycle suite", 10.0, body)


def test_criterion_9_numeric_equivariance():
    def body():
        rng = random.Random(909)
        done = 0
        while done < 50:
            grp = random_group(rng, max_order=8)
            sig = random_signature(rng, grp, random_parity(rng, grp))
            f = random_rational(rng, sig, max_terms=3, max_degree=3)
            parts = f.decompose()
            if not parts:
                continue
            chi = rng.choice(sorted(parts, key=lambda c: c.residues))
            part = parts[chi]
            g = rng.choice(grp.elements())
            moved = part.act(g)
            factor = chi(g).embed()
            points = 0
            attempts = 0
            while points < 5 and attempts < 100:
                attempts += 1
                point = {
                    name: complex(rng.uniform(1.0, 2.0), rng.uniform(1.0, 2.0))
                    for name in sig.even
                }
                try:
                    base = part.evaluate_even(point, tol=1e-3)
                    after = moved.evaluate_even(point, tol=1e-3)
                except ZeroDivisionError:
                    continue
                values = list(base.values()) + list(after.values())
                if values and max(abs(v) for v in values) > 1e4:
                    continue  # ill-conditioned point, resample
                for key, val in base.items():
                    assert abs(after.get(key, 0j) - factor * val) < 1e-9
                points += 1
            if points == 5:
                done += 1

    _criterion("9 numeric equivariance (50 random, 5 points)", 10.0, body)


def test_criterion_10_base_restriction_kills_nonidentity_weights():
    def body():
        line = projective_line_lift()
        assert line.images["y@(1)"].restrict_to_base().is_zero()
        assert not line.images["y@(0)"].restrict_to_base().is_zero()

        superspace = projective_superspace_lift()
        for name in ("y@(2)", "eta@(1)", "eta@(3)"):
            assert superspace.images[name].restrict_to_base().is_zero()

        rng = random.Random(1010)
        sig = klein_xy_signature()
        chi_e = sig.group.identity_character
        for _ in range(5):
            f = random_even_xy_polynomial(rng, sig)
            for chi, part in f.decompose().items():
                if chi != chi_e:
                    assert part.restrict_to_base().is_zero()

    _criterion("10 base restriction of non-identity components", 5.0, body)
