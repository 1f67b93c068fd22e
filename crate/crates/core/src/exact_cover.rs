//! Small exact-cover solver (Algorithm X on plain vectors).

/// All ways to pick options covering every item of `0..universe` exactly
/// once. Each solution lists option indices in increasing order; solutions
/// come out in a deterministic order. Branching picks the uncovered item
/// with the fewest usable options.
pub fn exact_covers(universe: usize, options: &[Vec<usize>]) -> Vec<Vec<usize>> {
    let mut by_item = vec![vec![]; universe];
    for (o, items) in options.iter().enumerate() {
        for &i in items {
            by_item[i].push(o);
        }
    }
    let mut state = Search {
        options,
        by_item,
        covered: vec![false; universe],
        chosen: vec![],
        solutions: vec![],
    };
    state.run();
    state.solutions
}

struct Search<'a> {
    options: &'a [Vec<usize>],
    by_item: Vec<Vec<usize>>,
    covered: Vec<bool>,
    chosen: Vec<usize>,
    solutions: Vec<Vec<usize>>,
}

impl Search<'_> {
    fn usable(&self, o: usize) -> bool {
        self.options[o].iter().all(|&i| !self.covered[i])
    }

    fn run(&mut self) {
        let mut best: Option<(usize, Vec<usize>)> = None;
        for item in 0..self.covered.len() {
            if self.covered[item] {
                continue;
            }
            let cands: Vec<usize> = self.by_item[item]
                .iter()
                .copied()
                .filter(|&o| self.usable(o))
                .collect();
            if best.as_ref().is_none_or(|(_, b)| cands.len() < b.len()) {
                let empty = cands.is_empty();
                best = Some((item, cands));
                if empty {
                    break;
                }
            }
        }
        let Some((_, cands)) = best else {
            let mut sol = self.chosen.clone();
            sol.sort_unstable();
            self.solutions.push(sol);
            return;
        };
        for o in cands {
            for &i in &self.options[o] {
                self.covered[i] = true;
            }
            self.chosen.push(o);
            self.run();
            self.chosen.pop();
            for &i in &self.options[o] {
                self.covered[i] = false;
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn knuth_example() {
        // items A..G = 0..6
        let options = vec![
            vec![2, 4, 5],
            vec![0, 3, 6],
            vec![1, 2, 5],
            vec![0, 3],
            vec![1, 6],
            vec![3, 4, 6],
        ];
        assert_eq!(exact_covers(7, &options), vec![vec![0, 3, 4]]);
    }

    #[test]
    fn all_pairings_of_four() {
        let options: Vec<Vec<usize>> = vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]];
        let sols = exact_covers(4, &options);
        assert_eq!(sols, vec![vec![0, 5], vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn uncoverable() {
        assert!(exact_covers(3, &[vec![0, 1], vec![1, 2]]).is_empty());
        assert_eq!(exact_covers(0, &[]), vec![Vec::<usize>::new()]);
    }
}
