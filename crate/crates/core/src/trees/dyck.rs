use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    Up,
    Down,
}

/// A balanced word over `{U, D}` whose prefixes never go below height 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWalk {
    steps: Vec<Step>,
}

impl DyckWalk {
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: isize = 0;
        for (k, s) in steps.iter().enumerate() {
            height += match s {
                Step::Up => 1,
                Step::Down => -1,
            };
            if height < 0 {
                return Err(Error::InvalidDyckWord(format!(
                    "prefix of length {} goes below zero",
                    k + 1
                )));
            }
        }
        if height != 0 {
            return Err(Error::InvalidDyckWord(format!(
                "final height is {height}, expected 0"
            )));
        }
        Ok(DyckWalk { steps })
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        debug_assert!(DyckWalk::new(steps.clone()).is_ok());
        DyckWalk { steps }
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn semilength(&self) -> usize {
        self.steps.len() / 2
    }

    /// Contact vector `(c_0, .., c_n)`.
    ///
    /// `c_0` counts the returns to height 0. For `i >= 1`, `c_i` counts the
    /// down steps landing on the height reached by the `i`-th up step, before
    /// the walk first goes strictly below that height.
    pub fn contact_vector(&self) -> Vec<usize> {
        let n = self.semilength();
        let mut c = vec![0; n + 1];
        // owner[h]: index of the most recent up step ending at height h
        let mut owner = vec![0usize; n + 1];
        let mut height = 0;
        let mut ups = 0;
        for s in &self.steps {
            match s {
                Step::Up => {
                    ups += 1;
                    height += 1;
                    owner[height] = ups;
                }
                Step::Down => {
                    height -= 1;
                    c[owner[height]] += 1;
                }
            }
        }
        c
    }

    /// Descent vector `(d_0, .., d_n)`: `d_0 = 0` and `d_i` is the length of
    /// the run of down steps right after the `i`-th up step.
    pub fn descent_vector(&self) -> Vec<usize> {
        let mut d = vec![0];
        for s in &self.steps {
            match s {
                Step::Up => d.push(0),
                Step::Down => *d.last_mut().unwrap() += 1,
            }
        }
        d
    }
}

impl fmt::Display for DyckWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.steps {
            f.write_str(match s {
                Step::Up => "U",
                Step::Down => "D",
            })?;
        }
        Ok(())
    }
}

impl FromStr for DyckWalk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c {
                'U' | 'u' => Ok(Step::Up),
                'D' | 'd' => Ok(Step::Down),
                other => Err(Error::InvalidDyckWord(format!("unexpected letter {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        DyckWalk::new(steps)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trees::{enumerate_binary_trees, BinaryTree};

    #[test]
    fn parse_and_validate() {
        assert!("UUDD".parse::<DyckWalk>().is_ok());
        assert!("".parse::<DyckWalk>().is_ok());
        assert!(matches!("UDD".parse::<DyckWalk>(), Err(Error::InvalidDyckWord(_))));
        assert!(matches!("DU".parse::<DyckWalk>(), Err(Error::InvalidDyckWord(_))));
        assert!(matches!("UUD".parse::<DyckWalk>(), Err(Error::InvalidDyckWord(_))));
        assert!(matches!("UXD".parse::<DyckWalk>(), Err(Error::InvalidDyckWord(_))));
    }

    #[test]
    fn tree_conversion_examples() {
        let ta = BinaryTree::node(
            &BinaryTree::leaf(),
            &BinaryTree::node(&BinaryTree::leaf(), &BinaryTree::leaf()),
        );
        assert_eq!(ta.to_dyck().to_string(), "UUDD");
        assert_eq!(ta.mirror().to_dyck().to_string(), "UDUD");
    }

    #[test]
    fn contact_and_descent_examples() {
        let w: DyckWalk = "UUDD".parse().unwrap();
        assert_eq!(w.contact_vector(), vec![1, 1, 0]);
        assert_eq!(w.descent_vector(), vec![0, 0, 2]);
        let w: DyckWalk = "UDUD".parse().unwrap();
        assert_eq!(w.contact_vector(), vec![2, 0, 0]);
        assert_eq!(w.descent_vector(), vec![0, 1, 1]);
    }

    #[test]
    fn exhaustive_identities() {
        for n in 0..=8 {
            for t in enumerate_binary_trees(n).unwrap() {
                let w = t.to_dyck();
                assert_eq!(w.semilength(), n);
                assert_eq!(BinaryTree::from_dyck(&w), t);
                assert_eq!(w.contact_vector(), t.degree_vector());
                assert_eq!(w.descent_vector(), t.dual_degree_vector());
                let c = w.contact_vector();
                let steps = w.steps();
                let mut ups = 0;
                for (k, s) in steps.iter().enumerate() {
                    if *s == Step::Up {
                        ups += 1;
                        let followed_by_down = steps.get(k + 1) == Some(&Step::Down);
                        assert_eq!(c[ups] == 0, followed_by_down);
                    }
                }
            }
        }
    }
}
