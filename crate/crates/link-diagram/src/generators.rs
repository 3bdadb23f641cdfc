//! The link families under study: unknot, trefoil, Hopf link, the
//! connected sum of two Hopf links, Allen-Swenberg links built over a
//! tangle, and the closures used by the section-7 generalizations.
//!
//! Open-strand inputs are `LinkDiagram`s with endpoint order
//! `[a0, b0, ae, be]`: strand a runs a0 -> ae, strand b runs be -> b0.

use crate::builder::DiagramBuilder;
use crate::diagram::{DiagramError, LinkDiagram};

pub fn gen_unknot() -> LinkDiagram {
    LinkDiagram {
        name: "unknot".into(),
        arcs: vec!["a".into()],
        endpoints: vec![],
        crossings: vec![],
    }
}

/// The 3-crossing trefoil with relations c*b=a, b*a=c, a*c=b.
pub fn gen_trefoil() -> LinkDiagram {
    let mut b = DiagramBuilder::new("trefoil");
    b.crossing("k1", 1, "c", "b", "a");
    b.crossing("k2", 1, "b", "a", "c");
    b.crossing("k3", 1, "a", "c", "b");
    b.finish().expect("trefoil is well formed")
}

/// The Hopf link with relations n*m=n and m*n=m.
pub fn gen_hopf() -> LinkDiagram {
    let mut b = DiagramBuilder::new("hopf");
    b.crossing("h1", 1, "n", "m", "n");
    b.crossing("h2", 1, "m", "n", "m");
    b.finish().expect("hopf is well formed")
}

/// Connected sum of two Hopf links: arcs x, y1, y2, z and the four
/// crossing relations x*y1=x, y2=y1*x, y1=y2*z, z*y2=z.
pub fn gen_l2h() -> LinkDiagram {
    let mut b = DiagramBuilder::new("l2h");
    b.crossing("t1", 1, "x", "y1", "x");
    b.crossing("t2", 1, "y1", "x", "y2");
    b.crossing("t3", 1, "y2", "z", "y1");
    b.crossing("t4", 1, "z", "y2", "z");
    b.finish().expect("l2h is well formed")
}

fn check_tangle(t: &LinkDiagram) -> Result<(), DiagramError> {
    if t.endpoints.len() != 4 {
        return Err(DiagramError::InvalidTangle(format!(
            "open strand needs 4 endpoint entries, got {}",
            t.endpoints.len()
        )));
    }
    Ok(())
}

/// The n-th Allen-Swenberg link over a tangle fragment.
///
/// Three components: an x-circle threaded through a ladder of c/d
/// crossings against the middle component, the middle component passing
/// serially through 2n copies of the tangle, and a two-arc y-circle
/// clasped at the bottom. For n=1 the arcs and exterior crossings carry
/// the labels x1..x4, y1, y2, r, m, k and t1..t8.
pub fn gen_allen_swenberg(n: usize, tangle: &LinkDiagram) -> Result<LinkDiagram, DiagramError> {
    check_tangle(tangle)?;
    if n == 0 {
        return Err(DiagramError::InvalidTangle("n must be >= 1".into()));
    }
    let mut b = DiagramBuilder::new(format!("allen-swenberg-{n}"));
    // x-circle arcs xa[0..=2n] plus the clasp piece xs. For n=1 these are
    // named to match the usual A_1 picture.
    let xa: Vec<String> = (0..=2 * n)
        .map(|i| {
            if n == 1 {
                ["x3", "x1", "x2"][i].to_string()
            } else {
                format!("x{i}")
            }
        })
        .collect();
    let xs = if n == 1 { "x4".to_string() } else { "xs".to_string() };
    // Middle ladder arcs m[0..=2n]; m[0] is k, m[2n] is r.
    let mid: Vec<String> = (0..=2 * n)
        .map(|i| {
            if i == 0 {
                "k".to_string()
            } else if i == 2 * n {
                "r".to_string()
            } else if n == 1 {
                "m".to_string()
            } else {
                format!("m{i}")
            }
        })
        .collect();
    for a in xa.iter().chain(mid.iter()) {
        b.arc(a.clone());
    }
    b.arc(xs.clone());
    b.arc("y1");
    b.arc("y2");

    // Ladder: d_i cuts the x-circle under the middle, c_i cuts the middle
    // under the x-circle. For n=1 these are t4, t1 (d) and t3, t2 (c).
    for i in 1..=2 * n {
        let id = if n == 1 {
            if i == 1 { "t4".into() } else { "t1".into() }
        } else {
            format!("d{i}")
        };
        if i % 2 == 1 {
            b.crossing(&id, -1, &xa[i - 1], &mid[i - 1], &xa[i]);
        } else {
            b.crossing(&id, 1, &xa[i - 1], &mid[i], &xa[i]);
        }
    }
    for i in 1..=2 * n {
        let id = if n == 1 {
            if i == 1 { "t3".into() } else { "t2".into() }
        } else {
            format!("c{i}")
        };
        if i % 2 == 1 {
            b.crossing(&id, 1, &mid[i - 1], &xa[i], &mid[i]);
        } else {
            b.crossing(&id, -1, &mid[i - 1], &xa[i - 1], &mid[i]);
        }
    }
    // Closure: the x-circle clasps itself and the y-circle.
    b.crossing("t5", 1, &xa[2 * n], &xa[0], &xs);
    b.crossing("t6", 1, &xs, "y1", &xa[0]);
    b.crossing("t7", -1, "y1", &xa[1], "y2");
    b.crossing("t8", -1, "y2", &mid[2 * n], "y1");

    // Middle component: r enters the tangle stack (strand a downward),
    // U-turn at the bottom, back up through the b strands, out as k.
    let mut prev_ae: Option<String> = None;
    let mut ends = Vec::new();
    for j in 1..=2 * n {
        let e = b.splice(&format!("t{j}"), tangle)?;
        ends.push(e);
    }
    for (j, e) in ends.iter().enumerate() {
        let [a0, b0, ae, be] = e.clone();
        if j == 0 {
            b.unify(&mid[2 * n], &a0); // r feeds the first tangle
            b.unify(&mid[0], &b0); // and its b strand exits as k
        } else {
            b.unify(prev_ae.as_ref().unwrap(), &a0);
            let prev_be = &ends[j - 1][3];
            b.unify(prev_be, &b0);
        }
        if j == 2 * n - 1 {
            b.unify(&ae, &be); // bottom U-turn
        }
        prev_ae = Some(ae);
    }
    b.finish()
}

/// Closes an open strand into a knot by intertwining the starting and
/// ending pairs with two extra crossings.
pub fn gen_kom_knot(strand: &LinkDiagram) -> Result<LinkDiagram, DiagramError> {
    check_tangle(strand)?;
    let mut b = DiagramBuilder::new("kom");
    let [a0, b0, ae, be] = b.splice("s", strand)?;
    b.crossing("k1", 1, &ae, &b0, &be);
    b.crossing("k2", -1, &b0, &be, &a0);
    b.finish()
}

/// Two-component link of Prop 7.2 shape: each strand is closed into its
/// own circle, the two circles clasped through six crossings t1..t6.
pub fn gen_two_component_lom(
    s1: &LinkDiagram,
    s2: &LinkDiagram,
) -> Result<LinkDiagram, DiagramError> {
    check_tangle(s1)?;
    check_tangle(s2)?;
    let mut b = DiagramBuilder::new("two-component-lom");
    let [a0_1, b0_1, ae_1, be_1] = b.splice("L", s1)?;
    let [a0_2, b0_2, ae_2, be_2] = b.splice("R", s2)?;
    // Bottom of each component: end pair merged directly.
    b.unify(&ae_1, &be_1);
    b.unify(&ae_2, &be_2);
    // Left closure chain crosses under the right component's bottom arc.
    b.crossing("t1", 1, &b0_1, &ae_2, "z1");
    b.crossing("t2", -1, "z1", &ae_2, "z2");
    b.crossing("t5", 1, "z2", &ae_2, &a0_1);
    // Right closure chain crosses under the left component's bottom arc.
    b.crossing("t3", 1, &b0_2, &ae_1, "c1");
    b.crossing("t4", -1, "c1", &ae_1, "c2");
    b.crossing("t6", 1, "c2", &ae_1, &a0_2);
    b.finish()
}

/// Prop 7.3 generalization of the Allen-Swenberg family: the middle
/// tangles may all differ (even count required) and the bottom circle is
/// itself a closed open-strand.
pub fn gen_generalized_as(
    bottom: &LinkDiagram,
    middles: &[&LinkDiagram],
) -> Result<LinkDiagram, DiagramError> {
    check_tangle(bottom)?;
    if middles.is_empty() || middles.len() % 2 != 0 {
        return Err(DiagramError::OddCount(middles.len()));
    }
    for m in middles {
        check_tangle(m)?;
    }
    let n = middles.len() / 2;
    let mut b = DiagramBuilder::new(format!("generalized-as-{n}"));
    let xa: Vec<String> = (0..=2 * n).map(|i| format!("x{i}")).collect();
    let xs = "xs".to_string();
    let mid: Vec<String> = (0..=2 * n)
        .map(|i| {
            if i == 0 {
                "k".to_string()
            } else if i == 2 * n {
                "r".to_string()
            } else {
                format!("m{i}")
            }
        })
        .collect();
    for i in 1..=2 * n {
        if i % 2 == 1 {
            b.crossing(&format!("d{i}"), -1, &xa[i - 1], &mid[i - 1], &xa[i]);
        } else {
            b.crossing(&format!("d{i}"), 1, &xa[i - 1], &mid[i], &xa[i]);
        }
    }
    for i in 1..=2 * n {
        if i % 2 == 1 {
            b.crossing(&format!("c{i}"), 1, &mid[i - 1], &xa[i], &mid[i]);
        } else {
            b.crossing(&format!("c{i}"), -1, &mid[i - 1], &xa[i - 1], &mid[i]);
        }
    }
    // Bottom circle: the closed bottom strand takes the y-circle's place.
    let [l0_a0, l0_b0, l0_ae, l0_be] = b.splice("l0", bottom)?;
    b.unify(&l0_ae, &l0_be);
    b.crossing("t5", 1, &xa[2 * n], &xa[0], &xs);
    b.crossing("t6", 1, &xs, &l0_b0, &xa[0]);
    b.crossing("t7", -1, &l0_b0, &xa[1], "w1");
    b.crossing("t8", -1, "w1", &mid[2 * n], &l0_a0);
    // Middle component through the given tangles.
    let mut ends = Vec::new();
    for (j, m) in middles.iter().enumerate() {
        ends.push(b.splice(&format!("t{}", j + 1), m)?);
    }
    let count = ends.len();
    let mut prev_ae: Option<String> = None;
    for (j, e) in ends.iter().enumerate() {
        let [a0, b0, ae, be] = e.clone();
        if j == 0 {
            b.unify(&mid[2 * n], &a0);
            b.unify(&mid[0], &b0);
        } else {
            b.unify(prev_ae.as_ref().unwrap(), &a0);
            let prev_be = &ends[j - 1][3];
            b.unify(prev_be, &b0);
        }
        if j == count - 1 {
            b.unify(&ae, &be);
        }
        prev_ae = Some(ae);
    }
    b.finish()
}

/// The trivial open strand: two bare segments with opposite orientation.
pub fn trivial_open_diagram() -> LinkDiagram {
    LinkDiagram {
        name: "trivial-strand".into(),
        arcs: vec!["a".into(), "b".into()],
        endpoints: vec!["a".into(), "b".into(), "a".into(), "b".into()],
        crossings: vec![],
    }
}
