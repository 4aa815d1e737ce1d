//! Porter stemmer, original 1980 algorithm.
//!
//! Used by the METEOR stem-match stage. Within each rule list the first
//! matching suffix wins, and a matched suffix whose condition fails ends
//! the step — both per the published algorithm's semantics.

fn is_consonant(word: &[char], i: usize) -> bool {
    match word[i] {
        'a' | 'e' | 'i' | 'o' | 'u' => false,
        'y' => i == 0 || !is_consonant(word, i - 1),
        _ => true,
    }
}

/// The measure m: the number of vowel-consonant transitions.
fn measure(stem: &[char]) -> usize {
    let mut m = 0;
    let mut prev_vowel = false;
    for i in 0..stem.len() {
        let vowel = !is_consonant(stem, i);
        if prev_vowel && !vowel {
            m += 1;
        }
        prev_vowel = vowel;
    }
    m
}

fn contains_vowel(stem: &[char]) -> bool {
    (0..stem.len()).any(|i| !is_consonant(stem, i))
}

fn ends_double_consonant(word: &[char]) -> bool {
    word.len() >= 2
        && word[word.len() - 1] == word[word.len() - 2]
        && is_consonant(word, word.len() - 1)
}

/// *o: the stem ends consonant-vowel-consonant and the final consonant
/// is not w, x, or y.
fn ends_cvc(word: &[char]) -> bool {
    word.len() >= 3
        && is_consonant(word, word.len() - 3)
        && !is_consonant(word, word.len() - 2)
        && is_consonant(word, word.len() - 1)
        && !matches!(word[word.len() - 1], 'w' | 'x' | 'y')
}

fn ends_with(word: &[char], suffix: &str) -> bool {
    let n = suffix.chars().count();
    word.len() >= n && word[word.len() - n..].iter().copied().eq(suffix.chars())
}

fn replace_suffix(word: &[char], suffix_len: usize, replacement: &str) -> Vec<char> {
    let mut out = word[..word.len() - suffix_len].to_vec();
    out.extend(replacement.chars());
    out
}

type Cond = Option<fn(&[char]) -> bool>;

fn apply_rule_list(word: &[char], rules: &[(&str, &str, Cond)]) -> Vec<char> {
    for (suffix, replacement, condition) in rules {
        if *suffix == "*d" {
            if ends_double_consonant(word) {
                let stem = &word[..word.len() - 2];
                return match condition {
                    Some(cond) if !cond(stem) => word.to_vec(),
                    _ => {
                        let mut out = stem.to_vec();
                        out.extend(replacement.chars());
                        out
                    }
                };
            }
        } else if ends_with(word, suffix) {
            let stem_len = word.len() - suffix.chars().count();
            let stem = &word[..stem_len];
            return match condition {
                Some(cond) if !cond(stem) => word.to_vec(),
                _ => replace_suffix(word, suffix.chars().count(), replacement),
            };
        }
    }
    word.to_vec()
}

fn has_positive_measure(stem: &[char]) -> bool {
    measure(stem) > 0
}

fn measure_gt_1(stem: &[char]) -> bool {
    measure(stem) > 1
}

fn ion_condition(stem: &[char]) -> bool {
    measure(stem) > 1 && !stem.is_empty() && matches!(stem[stem.len() - 1], 's' | 't')
}

fn step_1b(word: Vec<char>) -> Vec<char> {
    if ends_with(&word, "eed") {
        let stem = &word[..word.len() - 3];
        if measure(stem) > 0 {
            return replace_suffix(&word, 3, "ee");
        }
        return word;
    }
    let mut intermediate: Option<Vec<char>> = None;
    for suffix in ["ed", "ing"] {
        if ends_with(&word, suffix) {
            let candidate = &word[..word.len() - suffix.len()];
            if contains_vowel(candidate) {
                intermediate = Some(candidate.to_vec());
            }
            break;
        }
    }
    let Some(stem) = intermediate else {
        return word;
    };
    let last = stem[stem.len() - 1];
    // cleanup after removing -ed/-ing
    if ends_with(&stem, "at") || ends_with(&stem, "bl") || ends_with(&stem, "iz") {
        let mut out = stem;
        out.push('e');
        return out;
    }
    if ends_double_consonant(&stem) {
        if matches!(last, 'l' | 's' | 'z') {
            return stem;
        }
        return stem[..stem.len() - 1].to_vec();
    }
    if measure(&stem) == 1 && ends_cvc(&stem) {
        let mut out = stem;
        out.push('e');
        return out;
    }
    stem
}

/// Stems a single lowercase-folded word.
pub fn porter_stem(word: &str) -> String {
    let mut w: Vec<char> = word.to_lowercase().chars().collect();
    if w.is_empty() {
        return String::new();
    }

    // Step 1a
    w = apply_rule_list(
        &w,
        &[
            ("sses", "ss", None),
            ("ies", "i", None),
            ("ss", "ss", None),
            ("s", "", None),
        ],
    );

    // Step 1b
    w = step_1b(w);

    // Step 1c
    w = apply_rule_list(&w, &[("y", "i", Some(contains_vowel))]);

    // Step 2
    w = apply_rule_list(
        &w,
        &[
            ("ational", "ate", Some(has_positive_measure)),
            ("tional", "tion", Some(has_positive_measure)),
            ("enci", "ence", Some(has_positive_measure)),
            ("anci", "ance", Some(has_positive_measure)),
            ("izer", "ize", Some(has_positive_measure)),
            ("abli", "able", Some(has_positive_measure)),
            ("alli", "al", Some(has_positive_measure)),
            ("entli", "ent", Some(has_positive_measure)),
            ("eli", "e", Some(has_positive_measure)),
            ("ousli", "ous", Some(has_positive_measure)),
            ("ization", "ize", Some(has_positive_measure)),
            ("ation", "ate", Some(has_positive_measure)),
            ("ator", "ate", Some(has_positive_measure)),
            ("alism", "al", Some(has_positive_measure)),
            ("iveness", "ive", Some(has_positive_measure)),
            ("fulness", "ful", Some(has_positive_measure)),
            ("ousness", "ous", Some(has_positive_measure)),
            ("aliti", "al", Some(has_positive_measure)),
            ("iviti", "ive", Some(has_positive_measure)),
            ("biliti", "ble", Some(has_positive_measure)),
        ],
    );

    // Step 3
    w = apply_rule_list(
        &w,
        &[
            ("icate", "ic", Some(has_positive_measure)),
            ("ative", "", Some(has_positive_measure)),
            ("alize", "al", Some(has_positive_measure)),
            ("iciti", "ic", Some(has_positive_measure)),
            ("ical", "ic", Some(has_positive_measure)),
            ("ful", "", Some(has_positive_measure)),
            ("ness", "", Some(has_positive_measure)),
        ],
    );

    // Step 4
    w = apply_rule_list(
        &w,
        &[
            ("al", "", Some(measure_gt_1)),
            ("ance", "", Some(measure_gt_1)),
            ("ence", "", Some(measure_gt_1)),
            ("er", "", Some(measure_gt_1)),
            ("ic", "", Some(measure_gt_1)),
            ("able", "", Some(measure_gt_1)),
            ("ible", "", Some(measure_gt_1)),
            ("ant", "", Some(measure_gt_1)),
            ("ement", "", Some(measure_gt_1)),
            ("ment", "", Some(measure_gt_1)),
            ("ent", "", Some(measure_gt_1)),
            ("ion", "", Some(ion_condition)),
            ("ou", "", Some(measure_gt_1)),
            ("ism", "", Some(measure_gt_1)),
            ("ate", "", Some(measure_gt_1)),
            ("iti", "", Some(measure_gt_1)),
            ("ous", "", Some(measure_gt_1)),
            ("ive", "", Some(measure_gt_1)),
            ("ize", "", Some(measure_gt_1)),
        ],
    );

    // Step 5a
    if ends_with(&w, "e") {
        let stem = &w[..w.len() - 1];
        let m = measure(stem);
        if m > 1 || (m == 1 && !ends_cvc(stem)) {
            w = stem.to_vec();
        }
    }

    // Step 5b
    if measure(&w) > 1 && ends_double_consonant(&w) && ends_with(&w, "l") {
        w.pop();
    }

    w.into_iter().collect()
}
