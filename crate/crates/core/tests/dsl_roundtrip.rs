use proptest::prelude::*;
use sdfa_core::dsl::{parse_element, parse_ideal, parse_ring};
use sdfa_core::{Error, Ideal};

/// Small ring specs drawn from every constructor of the language.
fn ring_spec() -> impl Strategy<Value = String> {
    let leaf = prop_oneof![
        (2usize..=12).prop_map(|n| format!("zn({n})")),
        Just("gf(2,[1,1,1])".to_string()),
        Just("gf(3,[1,0,1])".to_string()),
        (prop::sample::select(vec![2usize, 3]), prop::collection::vec(0usize..2, 2)).prop_map(|(p, c)| {
            format!("polyq({p},[{},{},1])", c[0], c[1])
        }),
    ];
    leaf.prop_recursive(2, 64, 3, |inner| {
        prop_oneof![
            (inner.clone(), inner.clone()).prop_map(|(a, b)| format!("prod({a},{b})")),
            (2usize..=6).prop_map(|n| format!("idealize(zn({n});mod=0)")),
            (2usize..=6).prop_map(|n| format!("quot(zn({});gens=[{n}])", 2 * n)),
        ]
    })
    .prop_filter("order stays small", |s| parse_ring(s).map(|r| r.order() <= 400).unwrap_or(false))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn label_parses_back_to_the_same_ring(spec in ring_spec()) {
        let r = parse_ring(&spec).unwrap();
        let again = parse_ring(r.label()).unwrap();
        prop_assert_eq!(again.label(), r.label());
        prop_assert_eq!(again.order(), r.order());
        for a in r.elements() {
            for b in r.elements().step_by(7) {
                prop_assert_eq!(again.add(a, b), r.add(a, b));
                prop_assert_eq!(again.mul(a, b), r.mul(a, b));
            }
        }
        prop_assert!(r.verify_axioms().is_ok());
    }

    #[test]
    fn rendered_elements_parse_back(spec in ring_spec()) {
        let r = parse_ring(&spec).unwrap();
        for a in r.elements() {
            prop_assert_eq!(parse_element(&r, &r.render(a)).unwrap(), a);
        }
    }

    #[test]
    fn generated_ideal_is_the_additive_closure_of_multiples(spec in ring_spec(), pick in 0usize..1000) {
        let r = parse_ring(&spec).unwrap();
        let g = pick % r.order();
        let ideal = parse_ideal(&r, &format!("[{}]", r.render(g))).unwrap();
        let mut closure: Vec<usize> = vec![r.zero()];
        loop {
            let mut next = closure.clone();
            for &x in &closure {
                for y in r.elements().map(|s| r.mul(s, g)) {
                    let z = r.add(x, y);
                    if !next.contains(&z) {
                        next.push(z);
                    }
                }
            }
            if next.len() == closure.len() {
                break;
            }
            closure = next;
        }
        closure.sort_unstable();
        prop_assert_eq!(ideal.elements(), closure);
        prop_assert_eq!(ideal.elements(), Ideal::principal(&r, g).elements());
    }
}

#[test]
fn parse_errors_carry_positions() {
    for (src, pos) in [("zn(", 3), ("prod(zn(2),", 11), ("zz(4)", 0)] {
        match parse_ring(src) {
            Err(Error::Parse { pos: p, .. }) => assert_eq!(p, pos, "{src}"),
            other => panic!("{src}: {other:?}"),
        }
    }
}

#[test]
fn oversized_ring_is_a_resource_error() {
    assert!(matches!(parse_ring("prod(zn(100),zn(100))"), Err(Error::Resource { .. })));
}
