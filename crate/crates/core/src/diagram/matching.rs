use crate::error::{Error, Result};

/// Augmenting-path bipartite matching between β curves and α curves.
///
/// β curves are processed in order and each tries its crossings in listing order,
/// so the result is deterministic. Returns one crossing per β curve.
pub fn find_matching_in(
    genus: usize,
    beta: &[Vec<usize>],
    alpha_of: &[usize],
) -> Result<Vec<usize>> {
    // owner[i] = crossing currently matched on α_i
    let mut owner: Vec<Option<usize>> = vec![None; genus];
    let beta_of: Vec<usize> = {
        let mut v = vec![0; alpha_of.len()];
        for (j, b) in beta.iter().enumerate() {
            for &c in b {
                v[c] = j;
            }
        }
        v
    };

    fn augment(
        j: usize,
        beta: &[Vec<usize>],
        alpha_of: &[usize],
        beta_of: &[usize],
        owner: &mut [Option<usize>],
        seen: &mut [bool],
    ) -> bool {
        for &c in &beta[j] {
            let i = alpha_of[c];
            if seen[i] {
                continue;
            }
            seen[i] = true;
            let free = match owner[i] {
                None => true,
                Some(prev) => augment(beta_of[prev], beta, alpha_of, beta_of, owner, seen),
            };
            if free {
                owner[i] = Some(c);
                return true;
            }
        }
        false
    }

    for j in 0..genus {
        let mut seen = vec![false; genus];
        if !augment(j, beta, alpha_of, &beta_of, &mut owner, &mut seen) {
            return Err(Error::NoPerfectMatching);
        }
    }
    let mut out = vec![usize::MAX; genus];
    for c in owner.into_iter().flatten() {
        out[beta_of[c]] = c;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diagram::{example_d1, example_d2};

    #[test]
    fn example_matchings() {
        let d1 = example_d1();
        assert_eq!(d1.find_matching().unwrap(), vec![d1.crossing("c").unwrap()]);
        let d2 = example_d2();
        let m = d2.find_matching().unwrap();
        assert_eq!(
            m,
            vec![d2.crossing("c").unwrap(), d2.crossing("e").unwrap()]
        );
    }

    #[test]
    fn isolated_alpha_has_no_matching() {
        // α_2 meets nothing: both crossings lie on α_1
        let beta = vec![vec![0], vec![1]];
        assert_eq!(
            find_matching_in(2, &beta, &[0, 0]),
            Err(Error::NoPerfectMatching)
        );
    }

    #[test]
    fn needs_augmenting() {
        // β_0 meets α_0 and α_1, β_1 only α_0
        let beta = vec![vec![0, 1], vec![2]];
        let m = find_matching_in(2, &beta, &[0, 1, 0]).unwrap();
        assert_eq!(m, vec![1, 2]);
    }
}
