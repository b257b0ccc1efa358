//! Shared test helpers.

use proptest::prelude::*;

use crate::words::Word;

/// Strategy producing arbitrary flattened Catalan words of length
/// `1..=max_n`, built by walking the admissible-letter ranges: after any
/// prefix the next letter may be anything in `leader..=last+1`.
pub fn arb_flattened_word(max_n: usize) -> impl Strategy<Value = Word> {
    (1..=max_n)
        .prop_flat_map(|n| proptest::collection::vec(any::<u32>(), n - 1))
        .prop_map(|choices| {
            let mut letters = vec![0u32];
            let mut leader = 0u32;
            for raw in choices {
                let last = *letters.last().expect("nonempty");
                let span = last + 2 - leader;
                let letter = leader + raw % span;
                if letter < last {
                    leader = letter;
                }
                letters.push(letter);
            }
            Word::new(letters)
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bijections;
    use crate::stats::{statistic, StatKind};
    use crate::words::first_return_decompose;

    proptest! {
        #[test]
        fn generated_words_are_flattened(word in arb_flattened_word(24)) {
            prop_assert!(word.is_flattened());
        }

        #[test]
        fn decomposition_roundtrips(word in arb_flattened_word(24)) {
            prop_assert_eq!(first_return_decompose(&word).recompose(), word);
        }

        #[test]
        fn text_form_roundtrips(word in arb_flattened_word(24)) {
            let reparsed: Word = word.to_string().parse().unwrap();
            prop_assert_eq!(reparsed, word);
        }

        #[test]
        fn run_identities_hold(word in arb_flattened_word(24)) {
            let n = word.len();
            prop_assert_eq!(
                statistic(&word, StatKind::Runs) + statistic(&word, StatKind::WeakDescentRuns),
                n + 1
            );
            prop_assert_eq!(
                statistic(&word, StatKind::DescentRuns),
                n + 1 - statistic(&word, StatKind::WeakRuns)
            );
        }

        #[test]
        fn phi_is_involutive(word in arb_flattened_word(20)) {
            let image = bijections::phi(&word).unwrap();
            prop_assert_eq!(bijections::phi(&image).unwrap(), word);
        }

        #[test]
        fn psi_roundtrips(word in arb_flattened_word(16)) {
            let c = bijections::psi_composition(&word).unwrap();
            prop_assert_eq!(bijections::psi_composition_inverse(&c).unwrap(), word);
        }
    }
}
