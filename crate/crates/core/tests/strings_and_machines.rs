use proptest::prelude::*;
use simple_games_core::bitstr::pairwise_incompatible;
use simple_games_core::detgame::{eval, finite_example, FINITE_TYPES};
use simple_games_core::machine::{run_program, set_program, CodeNumber, Instr, Numbering, Program};
use simple_games_core::noncomp::{build_noncomputable, eval_exception, NONCOMP_TYPES};
use simple_games_core::{BitString, SetSpec, Verdict};

fn bits(max: usize) -> impl Strategy<Value = BitString> {
    proptest::collection::vec(any::<bool>(), 0..max).prop_map(BitString::from_bits)
}

fn set_spec() -> impl Strategy<Value = SetSpec> {
    (bits(12), any::<bool>()).prop_map(|(p, t)| SetSpec::new(p, t))
}

fn instr() -> impl Strategy<Value = Instr> {
    prop_oneof![
        (0u32..4).prop_map(Instr::Inc),
        (0u32..4, 0u32..8).prop_map(|(r, t)| Instr::DecJz(r, t)),
        (0u32..4).prop_map(Instr::Halt),
    ]
}

/// Every even-length string of at most `max_len` bits whose pairs are
/// `10`/`01`, by direct enumeration of pair choices.
fn p_strings(max_len: usize) -> Vec<BitString> {
    let mut out = vec![BitString::new()];
    let mut layer = vec![BitString::new()];
    for _ in 0..max_len / 2 {
        layer = layer
            .iter()
            .flat_map(|s| [s.with_suffix("10"), s.with_suffix("01")])
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

#[test]
fn p_and_d_strings_are_incompatible_with_each_other_up_to_length_twelve() {
    let ps = p_strings(12);
    assert!(ps.iter().all(BitString::is_p_string));
    let ds: Vec<BitString> = ps
        .iter()
        .filter(|p| p.len() <= 10)
        .flat_map(|p| [p.with_suffix("00"), p.with_suffix("11")])
        .collect();
    assert!(ds.iter().all(BitString::is_d_string));
    assert!(pairwise_incompatible(ds.iter()).is_ok());
    for d in &ds {
        for p in &ps {
            assert!(d.incompatible(p) || p.is_prefix_of(d), "{d} {p}");
        }
    }
}

proptest! {
    #[test]
    fn complement_preserves_string_kinds(s in bits(20)) {
        let c = s.complement();
        prop_assert_eq!(c.complement(), s.clone());
        prop_assert_eq!(c.is_p_string(), s.is_p_string());
        prop_assert_eq!(c.is_d_string(), s.is_d_string());
        prop_assert_eq!(c.len(), s.len());
    }

    #[test]
    fn incompatibility_is_symmetric_and_excludes_prefixes(a in bits(10), b in bits(10)) {
        prop_assert_eq!(a.incompatible(&b), b.incompatible(&a));
        let prefix_related = a.is_prefix_of(&b) || b.is_prefix_of(&a);
        prop_assert_eq!(a.incompatible(&b), !prefix_related);
    }

    #[test]
    fn string_parsing_round_trips(s in bits(30)) {
        let text = s.to_string();
        prop_assert_eq!(text.parse::<BitString>().unwrap(), s);
    }

    #[test]
    fn set_specs_are_normalized(s in set_spec()) {
        let again = SetSpec::new(s.segment(s.settled_after() + 5), s.tail());
        prop_assert_eq!(again, s.clone());
        prop_assert_eq!(s.complement().complement(), s.clone());
        prop_assert!(s.is_disjoint_from(&s.complement()));
        prop_assert!(s.intersection(&s.complement()) == SetSpec::empty());
    }

    #[test]
    fn set_programs_compute_membership(s in set_spec()) {
        let p = set_program(&s);
        for i in 0..(s.settled_after() as u64 + 4) {
            prop_assert_eq!(run_program(&p, i, 10_000).bit(), Some(s.contains_index(i)));
        }
    }

    #[test]
    fn numberings_round_trip(prog in proptest::collection::vec(instr(), 1..6)) {
        let p = Program(prog);
        for n in [Numbering::Standard, Numbering::Curated] {
            prop_assert_eq!(n.decode(&n.encode(&p)), p.clone());
        }
    }

    #[test]
    fn decoding_any_small_code_is_total(k in 0u64..100_000) {
        for n in [Numbering::Standard, Numbering::Curated] {
            let p = n.decode(&CodeNumber::from(k));
            prop_assert!(!p.is_empty());
        }
    }

    #[test]
    fn deeper_evaluation_never_flips(t in 0usize..FINITE_TYPES.len(), s in set_spec(), d in 0usize..6) {
        let sets = finite_example(FINITE_TYPES[t]).unwrap();
        let shallow = eval(&sets, &s, d);
        let deep = eval(&sets, &s, d + 3);
        prop_assert!(shallow.consistent_refinement(deep));
    }

    #[test]
    fn exception_games_agree_with_their_base_elsewhere(t in 0usize..NONCOMP_TYPES.len(), s in set_spec()) {
        let g = build_noncomputable(NONCOMP_TYPES[t]).unwrap();
        let d = g.depth();
        let v = eval_exception(&g, &s, d);
        prop_assert_ne!(v, Verdict::Undetermined);
        if s != g.a && s != g.a.complement() {
            prop_assert_eq!(v, eval(&g.base, &s, d));
        }
    }
}

trait ContainsIndex {
    fn contains_index(&self, i: u64) -> bool;
}

impl ContainsIndex for SetSpec {
    fn contains_index(&self, i: u64) -> bool {
        self.get(i as usize)
    }
}
