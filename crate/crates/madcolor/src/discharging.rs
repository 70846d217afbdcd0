//! Discharging ledgers. Every vertex starts with charge equal to its degree;
//! a rule set moves exact rational amounts along edges and weak-neighbor
//! relations. Transfers are computed simultaneously from the static degree
//! and W-class structure, so total charge is conserved exactly.

use crate::configs::{find_config_thm3, find_config_thm4, find_config_thm5};
use crate::graph::{classify_w, Graph, WClass};
use crate::mad::mad_exact;
use crate::rational::Rat;
use serde::Serialize;
use std::collections::BTreeMap;

/// Which rule set to apply; the targets are the bounds 18/7, 14/5 and 3.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleSet {
    Thm3,
    Thm4,
    Thm5,
}

impl RuleSet {
    pub fn bound(self) -> Rat {
        match self {
            RuleSet::Thm3 => Rat::new(18, 7),
            RuleSet::Thm4 => Rat::new(14, 5),
            RuleSet::Thm5 => Rat::from_int(3),
        }
    }

    pub fn list_size(self) -> usize {
        match self {
            RuleSet::Thm3 => 6,
            RuleSet::Thm4 => 7,
            RuleSet::Thm5 => 8,
        }
    }
}

/// One charge movement, tagged with the rule that produced it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Transfer {
    pub from: usize,
    pub to: usize,
    pub amount: Rat,
    pub rule: &'static str,
}

/// Initial charges, all transfers, and the resulting final charges.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChargeLedger {
    pub initial: Vec<Rat>,
    pub final_charges: Vec<Rat>,
    pub transfers: Vec<Transfer>,
}

impl ChargeLedger {
    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Repr<'a> {
            initial: BTreeMap<String, &'a Rat>,
            #[serde(rename = "final")]
            final_charges: BTreeMap<String, &'a Rat>,
            transfers: &'a [Transfer],
        }
        let repr = Repr {
            initial: self
                .initial
                .iter()
                .enumerate()
                .map(|(i, r)| (i.to_string(), r))
                .collect(),
            final_charges: self
                .final_charges
                .iter()
                .enumerate()
                .map(|(i, r)| (i.to_string(), r))
                .collect(),
            transfers: &self.transfers,
        };
        serde_json::to_string(&repr).unwrap()
    }

    pub fn total_final(&self) -> Rat {
        self.final_charges
            .iter()
            .fold(Rat::ZERO, |acc, &c| acc + c)
    }
}

fn rules_18_7(g: &Graph, out: &mut Vec<Transfer>) {
    let class = classify_w(g);
    for u in 0..g.n() {
        if g.degree(u) >= 3 {
            for &v in g.neighbors(u) {
                if g.degree(v) == 2 {
                    out.push(Transfer {
                        from: u,
                        to: v,
                        amount: Rat::new(2, 7),
                        rule: "R1",
                    });
                }
            }
            for w in g.weak_neighbors(u) {
                if class[w] == WClass::W3 {
                    out.push(Transfer {
                        from: u,
                        to: w,
                        amount: Rat::new(1, 7),
                        rule: "R2",
                    });
                }
            }
            for &v in g.neighbors(u) {
                if class[v] == WClass::W2 {
                    out.push(Transfer {
                        from: u,
                        to: v,
                        amount: Rat::new(1, 7),
                        rule: "R3",
                    });
                }
            }
        }
        if class[u] == WClass::W0 {
            for &x in g.neighbors(u) {
                if class[x] != WClass::W1 {
                    continue;
                }
                let has_w2_neighbor = g.neighbors(x).iter().any(|&t| class[t] == WClass::W2);
                let has_w3_weak = g
                    .weak_neighbors(x)
                    .iter()
                    .any(|&t| class[t] == WClass::W3);
                if has_w2_neighbor && has_w3_weak {
                    out.push(Transfer {
                        from: u,
                        to: x,
                        amount: Rat::new(1, 7),
                        rule: "R4",
                    });
                }
            }
        }
    }
}

fn rules_14_5(g: &Graph, out: &mut Vec<Transfer>) {
    let class = classify_w(g);
    for u in 0..g.n() {
        if g.degree(u) < 3 {
            continue;
        }
        for &v in g.neighbors(u) {
            if g.degree(v) == 2 {
                out.push(Transfer {
                    from: u,
                    to: v,
                    amount: Rat::new(2, 5),
                    rule: "R1",
                });
            } else if class[v] == WClass::W1 {
                out.push(Transfer {
                    from: u,
                    to: v,
                    amount: Rat::new(1, 10),
                    rule: "R2",
                });
            }
        }
    }
}

fn rules_3(g: &Graph, out: &mut Vec<Transfer>) {
    for u in 0..g.n() {
        if g.degree(u) < 4 {
            continue;
        }
        for &v in g.neighbors(u) {
            if g.degree(v) == 2 {
                out.push(Transfer {
                    from: u,
                    to: v,
                    amount: Rat::new(1, 2),
                    rule: "R1",
                });
            }
        }
    }
}

/// Applies the rule set and returns the full ledger.
pub fn discharge(g: &Graph, rules: RuleSet) -> ChargeLedger {
    let initial: Vec<Rat> = (0..g.n()).map(|v| Rat::from_int(g.degree(v) as i64)).collect();
    let mut transfers = Vec::new();
    match rules {
        RuleSet::Thm3 => rules_18_7(g, &mut transfers),
        RuleSet::Thm4 => rules_14_5(g, &mut transfers),
        RuleSet::Thm5 => rules_3(g, &mut transfers),
    }
    let mut final_charges = initial.clone();
    for t in &transfers {
        final_charges[t.from] = final_charges[t.from] - t.amount;
        final_charges[t.to] = final_charges[t.to] + t.amount;
    }
    ChargeLedger {
        initial,
        final_charges,
        transfers,
    }
}

/// Outcome of checking every final charge against a bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum DischargeCheck {
    AllAtLeastBound { minimum: Rat },
    Deficient { vertices: Vec<(usize, Rat)> },
}

pub fn verify_discharge(g: &Graph, rules: RuleSet, bound: Rat) -> (ChargeLedger, DischargeCheck) {
    let ledger = discharge(g, rules);
    let deficient: Vec<(usize, Rat)> = ledger
        .final_charges
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c < bound)
        .map(|(v, &c)| (v, c))
        .collect();
    let check = if deficient.is_empty() {
        let minimum = *ledger.final_charges.iter().min().unwrap();
        DischargeCheck::AllAtLeastBound { minimum }
    } else {
        DischargeCheck::Deficient {
            vertices: deficient,
        }
    };
    (ledger, check)
}

/// Cross-checks the three ingredients of the counting argument on a concrete
/// graph. `internal_inconsistency` flags the impossible combination: density
/// strictly below the bound, no reducible configuration, yet every final
/// charge at or above the bound (summing charges would contradict the
/// density). It must never be true.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ConsistencyReport {
    pub bound: Rat,
    pub mad: Rat,
    pub mad_below_bound: bool,
    pub config_found: bool,
    pub charges_all_at_least_bound: bool,
    pub internal_inconsistency: bool,
}

pub fn certify_contradiction(g: &Graph, rules: RuleSet) -> ConsistencyReport {
    let bound = rules.bound();
    let (mad, _) = mad_exact(g).expect("non-empty graph");
    let mad_below_bound = mad < bound;
    let config_found = match rules {
        RuleSet::Thm3 => find_config_thm3(g),
        RuleSet::Thm4 => find_config_thm4(g),
        RuleSet::Thm5 => find_config_thm5(g),
    }
    .is_some();
    let (_, check) = verify_discharge(g, rules, bound);
    let charges_ok = matches!(check, DischargeCheck::AllAtLeastBound { .. });
    ConsistencyReport {
        bound,
        mad,
        mad_below_bound,
        config_found,
        charges_all_at_least_bound: charges_ok,
        internal_inconsistency: mad_below_bound && !config_found && charges_ok,
    }
}
