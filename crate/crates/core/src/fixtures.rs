//! Small named complexes used across the test suites and examples.
//!
//! Each fixture is connected and desk-scale; together they cover the three
//! classification branches: paths, the star and the kite are generic, the
//! cycles and simplex boundaries come from the generators in
//! [`crate::complex`], and the Möbius strip is a generic two-dimensional
//! example large enough that enumerating its gradient fields is costly
//! while its Hasse diagram stays tiny.

use crate::complex::{ComplexError, SimplicialComplex};
use crate::morse::{parse_gvf_fields, DiscreteVectorField, MorseError};

/// The star with three leaves (the claw K₁,₃): center `c`, leaves
/// `x`, `y`, `z`. Its automorphism group is the symmetric group on the
/// leaves, of order 6.
pub fn star3() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[&["c", "x"], &["c", "y"], &["c", "z"]])
        .expect("fixture is well-formed")
}

/// A hollow triangle with a pendant edge: facets `ab`, `bc`, `ac`, `cd`.
/// One-dimensional, contains a 3-cycle but is not a cycle complex; its only
/// nontrivial automorphism swaps `a` and `b`.
pub fn kite() -> SimplicialComplex {
    SimplicialComplex::from_facets(&[&["a", "b"], &["b", "c"], &["a", "c"], &["c", "d"]])
        .expect("fixture is well-formed")
}

/// The five-vertex triangulation of the Möbius strip: vertices `0`..`4`,
/// triangles `{i, i+1, i+2}` mod 5. Every edge `{i, i+1}` lies in two
/// triangles and every long edge `{i, i+2}` in exactly one; the boundary
/// circle walks the five long edges. Its automorphism group is dihedral of
/// order 10.
pub fn moebius5() -> SimplicialComplex {
    let labels: Vec<Vec<String>> = (0..5u32)
        .map(|i| {
            vec![
                i.to_string(),
                ((i + 1) % 5).to_string(),
                ((i + 2) % 5).to_string(),
            ]
        })
        .collect();
    SimplicialComplex::from_facet_labels(&labels).expect("fixture is well-formed")
}

/// A nine-pair gradient vector field on [`moebius5`], leaving exactly one
/// vertex and one edge unmatched. Written in the fixture text format to
/// exercise the parser.
pub fn moebius5_field_a(k: &SimplicialComplex) -> Result<DiscreteVectorField, MorseError> {
    parse_gvf_fields(
        k,
        "# critical cells: vertex 0 and edge 04\n\
         1>01 2>12 3>23 4>34 02>012 13>123 24>234 03>034 14>014\n",
    )
    .map(|mut fields| fields.remove(0))
}

/// A four-pair gradient vector field on [`moebius5`]; a subfield of
/// [`moebius5_field_a`].
pub fn moebius5_field_b(k: &SimplicialComplex) -> Result<DiscreteVectorField, MorseError> {
    parse_gvf_fields(k, "1>01 2>12 02>012 24>234\n").map(|mut fields| fields.remove(0))
}

/// Every fixture complex in this module plus the small generated families,
/// labeled for test diagnostics.
pub fn all_named() -> Result<Vec<(String, SimplicialComplex)>, ComplexError> {
    use crate::complex::{generate_boundary_simplex, generate_cycle, generate_path, generate_simplex};
    Ok(vec![
        ("path-3".to_string(), generate_path(3)?),
        ("path-4".to_string(), generate_path(4)?),
        ("path-5".to_string(), generate_path(5)?),
        ("star-3".to_string(), star3()),
        ("kite".to_string(), kite()),
        ("cycle-3".to_string(), generate_cycle(3)?),
        ("cycle-4".to_string(), generate_cycle(4)?),
        ("cycle-5".to_string(), generate_cycle(5)?),
        ("simplex-3".to_string(), generate_simplex(3)?),
        ("boundary-2".to_string(), generate_boundary_simplex(2)?),
        ("boundary-3".to_string(), generate_boundary_simplex(3)?),
        ("moebius-5".to_string(), moebius5()),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::morse::is_gradient;

    #[test]
    fn star_and_kite_shapes() {
        assert_eq!(star3().f_vector(), vec![4, 3]);
        assert_eq!(kite().f_vector(), vec![4, 4]);
    }

    #[test]
    fn moebius_shape() {
        let k = moebius5();
        assert_eq!(k.f_vector(), vec![5, 10, 5]);
        assert!(k.is_connected());
        // Each short edge {i, i+1} lies in two triangles, each long edge
        // {i, i+2} in one.
        let euler: isize = 5 - 10 + 5;
        assert_eq!(euler, 0);
    }

    #[test]
    fn moebius_fields_are_gradient_and_nested() {
        let k = moebius5();
        let a = moebius5_field_a(&k).unwrap();
        let b = moebius5_field_b(&k).unwrap();
        assert_eq!(a.len(), 9);
        assert_eq!(b.len(), 4);
        assert!(is_gradient(&k, &a));
        assert!(is_gradient(&k, &b));
        assert!(b.is_subfield_of(&a));
        assert!(!a.is_subfield_of(&b));
    }

    #[test]
    fn all_named_complexes_are_connected() {
        for (name, k) in all_named().unwrap() {
            assert!(k.is_connected(), "{name} should be connected");
            assert!(k.num_faces() > 0, "{name} should have faces");
        }
    }
}
