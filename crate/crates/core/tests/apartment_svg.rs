use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tiled_core::apartment::squared_length;
use tiled_core::random::{random_exponent_matrix, random_monomial};
use tiled_core::{hull_vertices, polytope_vertices, render_svg, ApartmentScene, Error, ExponentMatrix};

fn m3(rows: [[i64; 3]; 3]) -> ExponentMatrix {
    ExponentMatrix::validate(3, &rows.map(|r| r.to_vec())).unwrap()
}

/// `points` attributes of every polytope polygon, in document order.
fn polygon_points(svg: &str) -> Vec<Vec<(f64, f64)>> {
    svg.lines()
        .filter(|l| l.contains(r#"class="polytope""#) && l.contains("points="))
        .map(|l| {
            let start = l.find(r#"points=""#).unwrap() + 8;
            let end = start + l[start..].find('"').unwrap();
            l[start..end]
                .split(' ')
                .map(|p| {
                    let (x, y) = p.split_once(',').unwrap();
                    (x.parse().unwrap(), y.parse().unwrap())
                })
                .collect()
        })
        .collect()
}

fn edge_lengths(e: &ExponentMatrix) -> Vec<i64> {
    let c = polytope_vertices(e).unwrap();
    let mut out: Vec<i64> = (0..c.len()).map(|k| squared_length(c[k], c[(k + 1) % c.len()])).collect();
    out.sort_unstable();
    out
}

fn close(p: (f64, f64), q: (f64, f64)) -> bool {
    (p.0 - q.0).abs() < 0.006 && (p.1 - q.1).abs() < 0.006
}

#[test]
fn ex1_pair_renders_two_hulls() {
    let g = m3([[0, 1, 1], [0, 0, 1], [0, 1, 0]]);
    let g2 = m3([[0, 0, -1], [2, 0, 0], [2, 1, 0]]);
    let scene = ApartmentScene::fit(&[g.clone(), g2.clone()], 1, true).unwrap();
    let svg = render_svg(&scene);
    let polys = polygon_points(&svg);
    assert_eq!(polys.len(), 2);
    for (poly, e) in polys.iter().zip([&g, &g2]) {
        let corners = polytope_vertices(e).unwrap();
        assert_eq!(poly.len(), corners.len());
        for (p, c) in poly.iter().zip(&corners) {
            assert!(close(*p, scene.pixel(*c)));
        }
        for v in hull_vertices(e).unwrap() {
            assert!(poly.iter().any(|&p| close(p, scene.pixel(v))), "{v} is not a corner");
        }
    }
    assert!(svg.contains("[0,-1,0]"));
    assert_eq!(svg, render_svg(&scene));
}

#[test]
fn bare_lattice_and_point() {
    let empty = render_svg(&ApartmentScene::fit(&[], 2, false).unwrap());
    assert!(empty.contains("<line"));
    assert!(!empty.contains(r#"class="polytope""#));
    let point = render_svg(&ApartmentScene::fit(&[ExponentMatrix::zero(3).unwrap()], 1, false).unwrap());
    assert_eq!(point.matches("<circle class=\"polytope\"").count(), 1);
}

#[test]
fn three_reflection_classes() {
    // Γ_0, Γ_1, Γ_2 for the three-class example, sharing [0,0,0]
    let g = m3([[0, 1, 1], [0, 0, 1], [0, 1, 0]]);
    let shift = |s| g.conjugate_by_monomial(&tiled_core::MonomialMatrix::shift(3, s)).unwrap();
    let orders = [g.clone(), shift(-1), shift(-2)];
    let lengths: Vec<_> = orders.iter().map(edge_lengths).collect();
    assert!(lengths.iter().all(|l| *l == lengths[0]));
    let svg = render_svg(&ApartmentScene::fit(&orders, 1, true).unwrap());
    assert_eq!(polygon_points(&svg).len(), 3);
    for fill in &tiled_core::apartment::PALETTE[..3] {
        assert!(svg.contains(fill));
    }
}

#[test]
fn only_three_dimensional() {
    let e = ExponentMatrix::zero(4).unwrap();
    assert_eq!(hull_vertices(&e), Err(Error::UnsupportedDimension(4)));
    assert!(ApartmentScene::fit(&[e], 1, false).is_err());
}

proptest! {
    #[test]
    fn corners_are_rendered_exactly(seed: u64) {
        let e = random_exponent_matrix(&mut ChaCha8Rng::seed_from_u64(seed), 3, 3);
        let scene = ApartmentScene::fit(std::slice::from_ref(&e), 1, false).unwrap();
        let svg = render_svg(&scene);
        let corners = polytope_vertices(&e).unwrap();
        for v in hull_vertices(&e).unwrap() {
            prop_assert!(corners.contains(&v));
        }
        if corners.len() >= 3 {
            let poly = &polygon_points(&svg)[0];
            for (p, c) in poly.iter().zip(&corners) {
                prop_assert!(close(*p, scene.pixel(*c)));
            }
        }
    }

    #[test]
    fn congruent_polytopes_have_equal_edges(seed: u64) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let e = random_exponent_matrix(&mut rng, 3, 3);
        let c = e.conjugate_by_monomial(&random_monomial(&mut rng, 3, 3)).unwrap();
        prop_assert_eq!(edge_lengths(&e), edge_lengths(&c));
        let scene = ApartmentScene::fit(&[e, c], 1, true).unwrap();
        prop_assert_eq!(render_svg(&scene), render_svg(&scene.clone()));
    }
}
