//! The explicit minimal bimodule resolution `R_•` of the Hecke algebra and
//! the Hochschild cochain complex `Hom_{A^e}(R_•, A)`.

mod differential;
mod hom;
mod resolution;
mod term;
mod verify;

pub use differential::{branch_len, generator_image, select_branch, BoundaryReading, Branch, DifferentialOptions, Term};
pub use hom::{hom_dim, HomComplex};
pub use resolution::{BimoduleElement, ExplicitResolution, ResolutionSlice};
pub use term::{multiplicity, resolution_term, BimoduleProjective, HeckeRoles, SummandKind, SummandLabel};
pub use verify::{compare_with_simples, verify_complex, verify_exactness, verify_minimality, verify_multiplicities, DegreeCheck};

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{Field, PrimeField, Rationals};
    use crate::path_algebra::{AlgebraTable, QuiverPresentation};

    fn resolution<F: Field>(field: F, n: usize) -> ExplicitResolution<F> {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), field).unwrap();
        ExplicitResolution::new(a, n).unwrap()
    }

    #[test]
    fn low_degree_ranks() {
        let r = resolution(Rationals, 3);
        assert_eq!(r.slice(0).unwrap().rank, 11);
        assert_eq!(r.slice(0).unwrap().kernel_dim(), 50);
        assert_eq!(r.slice(1).unwrap().rank, 50);
    }

    #[test]
    fn complex_exact_minimal_rationals() {
        let r = resolution(Rationals, 10);
        for check in verify_complex(&r).into_iter().chain(verify_exactness(&r)).chain(verify_minimality(&r)) {
            assert!(check.ok, "{check:?}");
        }
    }

    #[test]
    fn hh_rationals_and_char_two() {
        let hom = HomComplex::new(&resolution(Rationals, 8));
        let hh: Vec<usize> = (0..8).map(|n| hom.hh_dim(n).unwrap()).collect();
        assert_eq!(hh, [5, 3, 3, 4, 5, 5, 5, 6]);
        assert_eq!(hom.hom_omega_dim(1).unwrap(), 5);
        assert!(hom.hh_dim(8).is_err());

        let hom2 = HomComplex::new(&resolution(PrimeField::new(2).unwrap(), 8));
        assert_eq!(hom2.hh_dim(1).unwrap(), 4);
        assert_eq!(hom2.hom_omega_dim(1).unwrap(), 6);
    }

    #[test]
    fn hom_dims_match_slices() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap();
        let roles = HeckeRoles::detect(a.quiver()).unwrap();
        let dims: Vec<usize> = [0, 3, 6].iter().map(|&n| hom_dim(&a, &roles, n)).collect();
        assert_eq!(dims, [7, 11, 16]);
    }

    #[test]
    fn top_matches_generator_sets_and_ext() {
        use crate::one_sided::ExtTable;
        let r = resolution(PrimeField::new(3).unwrap(), 12);
        for c in compare_with_simples(&r, 12) {
            assert!(c.ok, "{c:?}");
        }
        let ext = ExtTable::compute(r.algebra(), 12).unwrap();
        for c in verify_multiplicities(&r, &ext) {
            assert!(c.ok, "{c:?}");
        }
    }

    #[test]
    fn zero_boundary_reading_breaks_the_complex() {
        let a = AlgebraTable::build(&QuiverPresentation::hecke(), Rationals).unwrap();
        let opts = DifferentialOptions {
            boundary: BoundaryReading::Zero,
            ..Default::default()
        };
        let r = ExplicitResolution::with_options(a, 2, opts).unwrap();
        assert!(!verify_complex(&r)[0].ok);
    }
}
