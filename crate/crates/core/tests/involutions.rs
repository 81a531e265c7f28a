use altruns::verify::involution_suite;
use altruns::Engine;

#[test]
fn every_map_is_a_parity_reversing_involution_up_to_6() {
    let e = Engine::new(4);
    for n in 1..=6 {
        for m in involution_suite(&e, n).unwrap() {
            assert_eq!(m.violations, 0, "n = {n}: {m:?}");
        }
    }
}

#[test]
fn domains_are_populated() {
    let e = Engine::new(2);
    let maps = involution_suite(&e, 5).unwrap();
    assert_eq!(maps.len(), 13);
    assert!(maps.iter().all(|m| m.domain_size > 0), "{maps:#?}");
}
