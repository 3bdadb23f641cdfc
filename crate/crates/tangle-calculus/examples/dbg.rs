use tangle_calculus::*;
use quandle_core::{enumerate_quandles, EnumFilter, alexander_quandle};
use coloring_solver::{count_colorings, enhanced_polynomial};
fn main() {
    let mut quandles: Vec<_> = (1..=4).flat_map(|n| enumerate_quandles(n, EnumFilter::Medial, true).unwrap()).collect();
    quandles.push(alexander_quandle(5, &[-2,1]).unwrap());
    quandles.push(alexander_quandle(3, &[1,0,1]).unwrap()); // order 9, t^2+1
    let all_q: Vec<_> = (1..=4).flat_map(|n| enumerate_quandles(n, EnumFilter::All, true).unwrap()).collect();
    let mut worst = 0usize;
    for seed in 1..=40u64 {
        for moves in [3usize, 6, 8] {
            let s = random_lom(moves, seed);
            let rep = verify_structure(&s);
            assert!(rep.ok, "seed {seed} moves {moves}: {:?}", rep.violations);
            worst = worst.max(s.diagram.arcs.len());
            for q in &quandles {
                let t = check_theorem_5_1(&s, q, false).unwrap();
                assert!(t.pass, "THM FAIL seed {seed} moves {moves} order {}", q.order());
                assert_eq!(t.colorings, (q.order() as u64).pow(2), "count seed {seed}");
                verify_pair_steps(&s, q).unwrap();
            }
            let closed = glue_closure(&s);
            closed.validate().unwrap();
            for q in &all_q {
                let n = q.order() as u64;
                assert_eq!(count_colorings(&closed, q), n, "closure count seed {seed}");
                let phi = enhanced_polynomial(&closed, q);
                assert_eq!(phi.coeffs.get(&1).copied(), Some(n), "closure phi seed {seed}");
                assert_eq!(phi.coeffs.len(), 1);
            }
        }
    }
    println!("all good; largest strand had {worst} arcs");
}
