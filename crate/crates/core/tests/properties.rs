use proptest::prelude::*;
use wq_core::central::{char_series, compare_central, core, z_values};
use wq_core::meataxe::{intertwiner_space, is_simple};
use wq_core::modules::{build_v, check_clifford, Label, RootVector};
use wq_core::symmetric::{elementary_symmetric_all, power_sum, power_sums_from_elementary};
use wq_core::yangian::{chi_inverse, find_recurrence, GammaF, YGen};
use wq_core::{
    split_embed, GaussianRational as G, Monomial, MultiPoly, RationalSeries, UhElement, UniPoly, YangianImages,
};

fn scalar(bound: i64) -> impl Strategy<Value = G> {
    (-bound..=bound, -bound..=bound, 1..=3i64).prop_map(|(re, im, d)| &G::complex(re, im) / &G::from_int(d))
}

fn nonzero(bound: i64) -> impl Strategy<Value = G> {
    (-bound..=bound, -bound..=bound)
        .prop_filter("nonzero", |(re, im)| *re != 0 || *im != 0)
        .prop_map(|(re, im)| G::complex(re, im))
}

fn poly(n: usize) -> impl Strategy<Value = MultiPoly> {
    prop::collection::vec((prop::collection::vec(0u8..=2, n), scalar(4)), 0..4).prop_map(move |terms| {
        MultiPoly::from_terms(n, terms.into_iter().map(|(e, c)| (Monomial::from_exponents(&e), c)))
    })
}

fn uh(n: usize) -> impl Strategy<Value = UhElement> {
    prop::collection::vec((0..1u32 << n, poly(n)), 0..4)
        .prop_map(move |terms| UhElement::from_terms(n, terms).expect("masks fit the arity"))
}

fn uh_any() -> impl Strategy<Value = (UhElement, UhElement, UhElement)> {
    (1usize..=4).prop_flat_map(|n| (uh(n), uh(n), uh(n)))
}

fn homogeneous(a: &UhElement, parity: bool) -> UhElement {
    let (even, odd) = a.parity_split();
    if parity {
        odd
    } else {
        even
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn scalar_field_axioms(a in scalar(6), b in scalar(6), c in scalar(6)) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        if let Ok(inv) = a.inv() {
            prop_assert_eq!(&a * &inv, G::from_int(1));
        }
        prop_assert_eq!(a.to_string().parse::<G>().unwrap(), a.clone());
        let json = serde_json::to_string(&a).unwrap();
        prop_assert_eq!(serde_json::from_str::<G>(&json).unwrap(), a);
    }

    #[test]
    fn polynomial_ring_axioms((a, b, c) in (1usize..=3).prop_flat_map(|n| (poly(n), poly(n), poly(n)))) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&a * &b, &b * &a);
    }

    #[test]
    fn uh_is_associative_and_distributive((a, b, c) in uh_any()) {
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert_eq!(&(&a + &b) * &c, &(&a * &c) + &(&b * &c));
    }

    #[test]
    fn uh_parity_is_additive((a, b, _c) in uh_any(), pa in any::<bool>(), pb in any::<bool>()) {
        let (a, b) = (homogeneous(&a, pa), homogeneous(&b, pb));
        let p = &a * &b;
        if !p.is_zero() {
            prop_assert_eq!(p.parity(), Some(u8::from(pa ^ pb)));
        }
    }

    #[test]
    fn super_jacobi((a, b, c) in uh_any(), pa in any::<bool>(), pb in any::<bool>(), pc in any::<bool>()) {
        let (a, b, c) = (homogeneous(&a, pa), homogeneous(&b, pb), homogeneous(&c, pc));
        // [a,[b,c]] = [[a,b],c] + (-1)^{|a||b|} [b,[a,c]]
        let lhs = a.super_commutator(&b.super_commutator(&c).unwrap()).unwrap();
        let first = a.super_commutator(&b).unwrap().super_commutator(&c).unwrap();
        let second = b.super_commutator(&a.super_commutator(&c).unwrap()).unwrap();
        let rhs = if pa && pb { &first - &second } else { &first + &second };
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_is_multiplicative((a, b, _c) in uh_any(), vals in prop::collection::vec(scalar(3), 4)) {
        // the image is the Clifford algebra ξ_i² = s_i, so products are substituted again
        let s = &vals[..a.arity()];
        let lhs = (&a * &b).substitute_x(s).unwrap();
        let rhs = (&a.substitute_x(s).unwrap() * &b.substitute_x(s).unwrap()).substitute_x(s).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn split_embedding_is_multiplicative(
        (n1, n2, a, b) in (1usize..=2, 1usize..=2).prop_flat_map(|(n1, n2)| (Just(n1), Just(n2), uh(n1 + n2), uh(n1 + n2)))
    ) {
        let lhs = split_embed(&(&a * &b), n1, n2).unwrap();
        let rhs = &split_embed(&a, n1, n2).unwrap() * &split_embed(&b, n1, n2).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn uh_render_round_trips((a, _b, _c) in uh_any()) {
        prop_assert_eq!(UhElement::parse(&a.render(), a.arity()).unwrap(), a);
    }

    #[test]
    fn newton_identities(values in prop::collection::vec(scalar(4), 0..=6)) {
        let sigma = elementary_symmetric_all(&values);
        let from_sigma = power_sums_from_elementary(&sigma, 8);
        for (k, p) in from_sigma.iter().enumerate() {
            prop_assert_eq!(p, &power_sum(k as u32 + 1, &values));
        }
    }

    #[test]
    fn series_times_denominator_is_numerator(num in prop::collection::vec(scalar(4), 0..4), den in prop::collection::vec(scalar(4), 0..4)) {
        let mut d = vec![G::from_int(1)];
        d.extend(den);
        let s = RationalSeries::new(num, d).unwrap();
        let k = 8;
        let e = s.expand(k);
        for j in 0..=k {
            let mut acc = G::from_int(0);
            for (i, di) in s.denominator().iter().enumerate().take(j + 1) {
                acc += &(di * &e[j - i]);
            }
            prop_assert_eq!(acc, s.numerator().get(j).cloned().unwrap_or_else(|| G::from_int(0)));
        }
        let json = serde_json::to_string(&s).unwrap();
        prop_assert_eq!(serde_json::from_str::<RationalSeries>(&json).unwrap(), s);
    }

    #[test]
    fn character_expansion_matches_recursion(s in prop::collection::vec(scalar(4), 1..=6)) {
        prop_assert_eq!(char_series(&s).expand(8), z_values(&s, 8));
    }

    #[test]
    fn core_is_a_complete_invariant(s in prop::collection::vec(scalar(3), 0..=5), extra in nonzero(3), zeros in 0usize..3, rot in 0usize..6) {
        let mut t = s.clone();
        t.push(extra.clone());
        t.insert(0, -extra);
        t.extend(std::iter::repeat_n(G::from_int(0), zeros));
        let len = t.len();
        t.rotate_left(rot % len);
        prop_assert_eq!(core(&s), core(&t));
        prop_assert_eq!(core(core(&s).values()), core(&s));
        let c = compare_central(&s, &t);
        prop_assert!(c.consistent() && c.equal());
    }

    #[test]
    fn central_tests_agree(s in prop::collection::vec(scalar(2), 1..=4), t in prop::collection::vec(scalar(2), 1..=4)) {
        prop_assert!(compare_central(&s, &t).consistent());
    }

    #[test]
    fn chi_inverse_recovers_values(s in prop::collection::vec(scalar(4), 1..=6)) {
        let sigma = elementary_symmetric_all(&s);
        let a: Vec<G> = sigma.iter().skip(1).step_by(2).cloned().collect();
        let c: Vec<G> = sigma.iter().skip(2).step_by(2).cloned().collect();
        let (n, p) = chi_inverse(&a, &c);
        let expected = s.iter().fold(UniPoly::one(), |acc, v| acc.mul(&UniPoly::linear(v)));
        prop_assert_eq!(n, s.len());
        prop_assert_eq!(p, expected);
    }

    #[test]
    fn gamma_products_form_a_monoid(f in prop::collection::vec(scalar(3), 0..3), g in prop::collection::vec(scalar(3), 0..3), h in prop::collection::vec(scalar(3), 0..3)) {
        let (f, g, h) = (GammaF::new(f), GammaF::new(g), GammaF::new(h));
        prop_assert_eq!(f.mul(&g), g.mul(&f));
        prop_assert_eq!(f.mul(&g).mul(&h), f.mul(&g.mul(&h)));
        prop_assert_eq!(f.mul(&GammaF::one()), f);
    }

    #[test]
    fn ygen_text_round_trips(i in prop::bool::ANY, j in prop::bool::ANY, m in 0usize..20) {
        let g = YGen::new(if i { 1 } else { -1 }, if j { 1 } else { -1 }, m);
        prop_assert_eq!(g.to_string().parse::<YGen>().unwrap(), g);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn clifford_modules(roots in prop::collection::vec(scalar(3), 1..=6)) {
        let roots = RootVector::new(roots);
        let m = build_v(&roots);
        check_clifford(&m, &roots.s()).unwrap();
        let nonzero = roots.m();
        prop_assert_eq!(m.dim(), 1usize << nonzero.div_ceil(2));
        if nonzero > 0 {
            let labels: Vec<Label> = (0..roots.len()).map(Label::Xi).collect();
            let odd = intertwiner_space(&m, &m, &labels, 1).unwrap();
            let invertible = odd.iter().any(|x| x.is_invertible());
            prop_assert_eq!(invertible, nonzero % 2 == 1);
            prop_assert!(is_simple(&m, &labels).unwrap().is_simple());
        }
    }

    #[test]
    fn recurrence_of_typical_characters(roots in prop::collection::vec(nonzero(4), 1..=6)) {
        let roots = RootVector::new(roots);
        prop_assume!(roots.is_typical());
        let s = roots.s();
        let series = char_series(&s);
        let z = z_values(&s, 8);
        let rec = find_recurrence(&z).expect("a recurrence of length at most n");
        prop_assert_eq!(rec.coeffs.as_slice(), &series.denominator()[1..]);
    }

    #[test]
    fn index_negation_on_images(n in 1usize..=4) {
        let img = YangianImages::new(n);
        for g in YGen::all(2 * n) {
            let a = img.image(g);
            let b = img.image(YGen::new(-g.i(), -g.j(), g.m()));
            prop_assert_eq!(a, if g.m() % 2 == 0 { b } else { -b });
        }
    }
}
