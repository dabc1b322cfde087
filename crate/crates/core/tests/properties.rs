//! Property tests over randomly built ascent sequences, reaching sizes
//! the exhaustive suites do not: round trips through every map, text
//! format losslessness, and the flip statistic swap.

use proptest::prelude::*;

use fishburn::bijections::{
    flip, matrix_from_sequence, permutation_from_sequence, sequence_from_matrix,
    sequence_from_permutation,
};
use fishburn::objects::validate_ascent_sequence;
use fishburn::statistics::{matrix_stats, modified_sequence, seq_stats};
use fishburn::{AscentSequence, Error, FishburnMatrix, Permutation};

#[test]
fn text_forms_are_lossless_over_whole_families() {
    use fishburn::objects::{enumerate_ascent_sequences, enumerate_fishburn_matrices};
    use fishburn::patterns::enumerate_avoiders;
    for n in 1..=6 {
        for x in enumerate_ascent_sequences(n) {
            assert_eq!(x.to_string().parse::<AscentSequence>().unwrap(), x);
        }
        for a in enumerate_fishburn_matrices(n) {
            assert_eq!(a.to_string().parse::<FishburnMatrix>().unwrap(), a);
        }
        for p in enumerate_avoiders(n) {
            assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
        }
    }
}

/// Materializes raw choices into a valid ascent sequence: each entry is
/// its choice reduced modulo the ascent bound of the prefix plus one.
fn ascent_sequence(max_len: usize) -> impl Strategy<Value = AscentSequence> {
    (1..=max_len).prop_flat_map(|n| {
        proptest::collection::vec(any::<u16>(), n).prop_map(|choices| {
            let mut elems: Vec<usize> = Vec::with_capacity(choices.len());
            let mut asc = 0;
            for (i, c) in choices.into_iter().enumerate() {
                let bound = if i == 0 { 0 } else { asc + 1 };
                let v = c as usize % (bound + 1);
                if i > 0 && v > elems[i - 1] {
                    asc += 1;
                }
                elems.push(v);
            }
            AscentSequence::new(elems).expect("built within the bound")
        })
    })
}

proptest! {
    #[test]
    fn generated_sequences_validate(x in ascent_sequence(20)) {
        prop_assert!(validate_ascent_sequence(x.elems()));
    }

    #[test]
    fn decode_then_encode_is_identity(x in ascent_sequence(16)) {
        let p = permutation_from_sequence(&x);
        prop_assert_eq!(p.len(), x.len());
        prop_assert_eq!(sequence_from_permutation(&p).unwrap(), x);
    }

    #[test]
    fn build_then_peel_is_identity(x in ascent_sequence(24)) {
        let a = matrix_from_sequence(&x);
        prop_assert_eq!(a.weight() as usize, x.len());
        prop_assert_eq!(sequence_from_matrix(&a), x);
    }

    #[test]
    fn text_forms_are_lossless(x in ascent_sequence(14)) {
        let p = permutation_from_sequence(&x);
        let a = matrix_from_sequence(&x);
        prop_assert_eq!(x.to_string().parse::<AscentSequence>().unwrap(), x.clone());
        prop_assert_eq!(p.to_string().parse::<Permutation>().unwrap(), p);
        prop_assert_eq!(a.to_string().parse::<FishburnMatrix>().unwrap(), a);
    }

    #[test]
    fn corrupted_text_names_the_token(x in ascent_sequence(10)) {
        let p = permutation_from_sequence(&x);
        let err = format!("{p} !").parse::<Permutation>().unwrap_err();
        prop_assert_eq!(err, Error::BadToken { token: "!".into(), context: "permutation" });
    }

    #[test]
    fn flip_swaps_the_corner_statistics(x in ascent_sequence(20)) {
        let a = matrix_from_sequence(&x);
        let f = flip(&a);
        prop_assert_eq!(flip(&f), a.clone());
        let sa = matrix_stats(&a);
        let sf = matrix_stats(&f);
        prop_assert_eq!(sa.rsum1(), sf.csum_dim());
        prop_assert_eq!(sa.csum_dim(), sf.rsum1());
        prop_assert_eq!(sa.trace_nonzeros, sf.trace_nonzeros);
        prop_assert_eq!(sa.ne(), sf.ne());
    }

    #[test]
    fn modification_preserves_length_and_rightmost_run(x in ascent_sequence(20)) {
        let hat = modified_sequence(&x);
        prop_assert_eq!(hat.len(), x.len());
        // The procedure never touches the entry after the last ascent,
        // so the final entry survives.
        prop_assert_eq!(*hat.last().unwrap(), x.last());
        // The polynomial refinement evaluated at 1 counts the
        // right-maximum indices.
        let hs = seq_stats(&hat);
        prop_assert_eq!(hs.chi.eval_at_one() as usize, hs.rmax());
    }
}
