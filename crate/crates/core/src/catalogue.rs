//! Small built-in catalogue of substitutions used across tests, docs, and the
//! CLI's bundled data files. Each constructor returns a fresh value.

use crate::alphabet::{Alphabet, Word};
use crate::substitution::Substitution;

fn binary(images: [&[u32]; 2]) -> Substitution {
    let alphabet = Alphabet::numeric(2);
    let images = images.iter().map(|img| Word::new(img.to_vec())).collect();
    Substitution::new(alphabet, images).expect("catalogue data is valid")
}

/// Thue–Morse: `0 -> 01, 1 -> 10`. Primitive, 2-uniform.
pub fn thue_morse() -> Substitution {
    binary([&[0, 1], &[1, 0]])
}

/// Fibonacci: `0 -> 01, 1 -> 0`. Primitive, non-uniform.
pub fn fibonacci() -> Substitution {
    binary([&[0, 1], &[0]])
}

/// Letter doubling: `0 -> 00, 1 -> 11`. Two closed components.
pub fn doubling() -> Substitution {
    binary([&[0, 0], &[1, 1]])
}

/// Crossed doubling: `0 -> 11, 1 -> 00`. Strongly connected with period 2.
pub fn crossed_doubling() -> Substitution {
    binary([&[1, 1], &[0, 0]])
}

/// `a -> ab, b -> bb`: the letter `b` absorbs mass; `a` occurs exactly once
/// in every iterate of `a`.
pub fn absorbing() -> Substitution {
    let alphabet = Alphabet::new(vec!["a".into(), "b".into()]).expect("valid tokens");
    let images = vec![Word::new(vec![0, 1]), Word::new(vec![1, 1])];
    Substitution::new(alphabet, images).expect("catalogue data is valid")
}

/// Every catalogue member, in a stable order.
pub fn all() -> Vec<Substitution> {
    vec![
        thue_morse(),
        fibonacci(),
        doubling(),
        crossed_doubling(),
        absorbing(),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn uniformity_flags() {
        assert_eq!(thue_morse().uniform_length(), Some(2));
        assert_eq!(fibonacci().uniform_length(), None);
        assert_eq!(doubling().uniform_length(), Some(2));
        assert_eq!(crossed_doubling().uniform_length(), Some(2));
        assert_eq!(absorbing().uniform_length(), Some(2));
    }
}
