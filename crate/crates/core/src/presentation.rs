//! Finitely presented groups: generators, freely reduced words,
//! presentations, and morphisms given by generator images.
//!
//! Inverses are carried as a sign on each letter rather than as extra
//! generators, so a word is a sequence of `(generator, ±1)` letters with no
//! adjacent cancelling pair. The text format is line oriented:
//!
//! ```text
//! group Gamma
//! gens a b c
//! rel a c a^-1 c^-1
//! rel b^2
//! rel a b a b
//! ```
//!
//! `a^3` expands to three `(a, +1)` letters and `a^-2` to two `(a, -1)`
//! letters. Blank lines and lines starting with `#` are ignored.

use std::fmt;

use crate::error::{Error, Result};

/// Sign of a letter exponent: `+1` or `-1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i8(self) -> i8 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// Name of a generator, unique within one presentation.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GeneratorId(String);

impl GeneratorId {
    pub fn new(name: &str) -> Result<Self> {
        if is_valid_identifier(name) {
            Ok(GeneratorId(name.to_owned()))
        } else {
            Err(Error::InvalidIdentifier {
                name: name.to_owned(),
            })
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

fn is_valid_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    match chars.next() {
        Some(c) if c.is_ascii_alphabetic() => {}
        _ => return false,
    }
    chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Single signed letter of a word.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Letter {
    pub generator: GeneratorId,
    pub sign: Sign,
}

impl Letter {
    pub fn new(generator: GeneratorId, sign: Sign) -> Self {
        Letter { generator, sign }
    }

    pub fn inverse(&self) -> Letter {
        Letter {
            generator: self.generator.clone(),
            sign: self.sign.flip(),
        }
    }

    fn cancels(&self, other: &Letter) -> bool {
        self.generator == other.generator && self.sign != other.sign
    }
}

/// Freely reduced word in the generators. The empty word is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    /// Builds a word from raw letters, cancelling adjacent inverse pairs.
    /// This is the only way to construct a nonempty word, so every `Word`
    /// is freely reduced.
    pub fn from_letters<I>(letters: I) -> Self
    where
        I: IntoIterator<Item = Letter>,
    {
        let mut stack: Vec<Letter> = Vec::new();
        for letter in letters {
            if stack.last().is_some_and(|top| top.cancels(&letter)) {
                stack.pop();
            } else {
                stack.push(letter);
            }
        }
        Word { letters: stack }
    }

    pub fn letters(&self) -> &[Letter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Reversed letter order with all signs flipped; an involution.
    pub fn inverse(&self) -> Word {
        // Reversal of a reduced word is reduced.
        Word {
            letters: self.letters.iter().rev().map(Letter::inverse).collect(),
        }
    }

    /// Concatenation followed by free reduction.
    pub fn concat(&self, other: &Word) -> Word {
        Word::from_letters(self.letters.iter().chain(other.letters.iter()).cloned())
    }

    /// Replaces every letter by the image of its generator (inverted for
    /// negative letters) and reduces. `images` maps generator names to
    /// replacement words.
    pub fn substitute<'a, F>(&self, mut images: F) -> Result<Word>
    where
        F: FnMut(&GeneratorId) -> Option<&'a Word>,
    {
        let mut letters = Vec::new();
        for letter in &self.letters {
            let image = images(&letter.generator).ok_or_else(|| Error::UnknownGenerator {
                name: letter.generator.as_str().to_owned(),
            })?;
            match letter.sign {
                Sign::Plus => letters.extend(image.letters.iter().cloned()),
                Sign::Minus => letters.extend(image.inverse().letters),
            }
        }
        Ok(Word::from_letters(letters))
    }

    /// Text form using run-length exponents, e.g. `a c^-1 b^2`.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.letters.len() {
            let letter = &self.letters[i];
            let mut run = 1;
            while i + run < self.letters.len()
                && self.letters[i + run].generator == letter.generator
                && self.letters[i + run].sign == letter.sign
            {
                run += 1;
            }
            if !out.is_empty() {
                out.push(' ');
            }
            let exponent = letter.sign.as_i8() as i64 * run as i64;
            if exponent == 1 {
                out.push_str(letter.generator.as_str());
            } else {
                out.push_str(&format!("{}^{}", letter.generator, exponent));
            }
            i += run;
        }
        out
    }
}

impl fmt::Display for Word {
    fmt_display_via_to_text!();
}

macro_rules! fmt_display_via_to_text {
    () => {
        fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            f.write_str(&self.to_text())
        }
    };
}
use fmt_display_via_to_text;

/// A finitely presented group: named generators plus relator words.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroupPresentation {
    name: String,
    generators: Vec<GeneratorId>,
    relators: Vec<Word>,
}

impl GroupPresentation {
    /// Validates that generators are distinct, every relator letter is
    /// declared, and no relator reduces to the empty word.
    pub fn new(name: &str, generators: Vec<GeneratorId>, relators: Vec<Word>) -> Result<Self> {
        if name.is_empty() || name.chars().any(|c| c.is_whitespace()) {
            return Err(Error::Format(format!(
                "presentation name `{name}` must be a single nonempty token"
            )));
        }
        for (i, g) in generators.iter().enumerate() {
            if generators[..i].contains(g) {
                return Err(Error::DuplicateGenerator {
                    name: g.as_str().to_owned(),
                });
            }
        }
        for relator in &relators {
            if relator.is_empty() {
                return Err(Error::EmptyRelator { line: 0 });
            }
            for letter in relator.letters() {
                if !generators.contains(&letter.generator) {
                    return Err(Error::UnknownGenerator {
                        name: letter.generator.as_str().to_owned(),
                    });
                }
            }
        }
        Ok(GroupPresentation {
            name: name.to_owned(),
            generators,
            relators,
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn generators(&self) -> &[GeneratorId] {
        &self.generators
    }

    pub fn relators(&self) -> &[Word] {
        &self.relators
    }

    pub fn generator_index(&self, g: &GeneratorId) -> Option<usize> {
        self.generators.iter().position(|h| h == g)
    }

    /// Parses the line-oriented text format documented at module level.
    pub fn parse(text: &str) -> Result<Self> {
        let mut name: Option<String> = None;
        let mut generators: Vec<GeneratorId> = Vec::new();
        let mut seen_gens = false;
        let mut relators: Vec<Word> = Vec::new();

        for (lineno, raw_line) in text.lines().enumerate() {
            let line = lineno + 1;
            let trimmed = raw_line.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let tokens = tokenize(raw_line);
            let (keyword, kw_col) = tokens[0].clone();
            match keyword.as_str() {
                "group" => {
                    if name.is_some() {
                        return syntax(line, kw_col, "duplicate `group` line");
                    }
                    if seen_gens {
                        return syntax(line, kw_col, "`group` must come before `gens`");
                    }
                    if tokens.len() != 2 {
                        return syntax(line, kw_col, "expected `group <name>`");
                    }
                    name = Some(tokens[1].0.clone());
                }
                "gens" => {
                    if name.is_none() {
                        return syntax(line, kw_col, "`gens` before `group` line");
                    }
                    if seen_gens {
                        return syntax(line, kw_col, "duplicate `gens` line");
                    }
                    seen_gens = true;
                    for (tok, col) in &tokens[1..] {
                        let g = GeneratorId::new(tok)
                            .map_err(|_| syntax_err(line, *col, &format!("invalid generator name `{tok}`")))?;
                        if generators.contains(&g) {
                            return Err(Error::DuplicateGenerator {
                                name: tok.clone(),
                            });
                        }
                        generators.push(g);
                    }
                }
                "rel" => {
                    if !seen_gens {
                        return syntax(line, kw_col, "`rel` before `gens` line");
                    }
                    if tokens.len() < 2 {
                        return syntax(line, kw_col, "`rel` line has no letters");
                    }
                    let mut letters = Vec::new();
                    for (tok, col) in &tokens[1..] {
                        let (gen_name, exponent) = parse_letter_token(tok, line, *col)?;
                        let g = GeneratorId::new(&gen_name)
                            .map_err(|_| syntax_err(line, *col, &format!("invalid generator name `{gen_name}`")))?;
                        if !generators.contains(&g) {
                            return Err(Error::UndeclaredGenerator {
                                name: gen_name,
                                line,
                            });
                        }
                        let sign = if exponent > 0 { Sign::Plus } else { Sign::Minus };
                        for _ in 0..exponent.unsigned_abs() {
                            letters.push(Letter::new(g.clone(), sign));
                        }
                    }
                    let word = Word::from_letters(letters);
                    if word.is_empty() {
                        return Err(Error::EmptyRelator { line });
                    }
                    relators.push(word);
                }
                other => {
                    return syntax(line, kw_col, &format!("unknown keyword `{other}`"));
                }
            }
        }

        let name = name.ok_or_else(|| syntax_err(1, 1, "missing `group` line"))?;
        if !seen_gens {
            return Err(syntax_err(1, 1, "missing `gens` line"));
        }
        GroupPresentation::new(&name, generators, relators)
    }

    /// Serializes back to the text format, generators and relators in
    /// stored order. `parse(to_text(p)) == p` for every valid presentation.
    pub fn to_text(&self) -> String {
        let mut out = format!("group {}\n", self.name);
        out.push_str("gens");
        for g in &self.generators {
            out.push(' ');
            out.push_str(g.as_str());
        }
        out.push('\n');
        for relator in &self.relators {
            out.push_str("rel ");
            out.push_str(&relator.to_text());
            out.push('\n');
        }
        out
    }
}

fn tokenize(line: &str) -> Vec<(String, usize)> {
    let mut tokens = Vec::new();
    let mut current = String::new();
    let mut start = 0;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if !current.is_empty() {
                tokens.push((std::mem::take(&mut current), start + 1));
            }
        } else {
            if current.is_empty() {
                start = i;
            }
            current.push(c);
        }
    }
    if !current.is_empty() {
        tokens.push((current, start + 1));
    }
    tokens
}

fn parse_letter_token(tok: &str, line: usize, col: usize) -> Result<(String, i64)> {
    match tok.split_once('^') {
        None => Ok((tok.to_owned(), 1)),
        Some((name, exp)) => {
            let exponent: i64 = exp
                .parse()
                .map_err(|_| syntax_err(line, col, &format!("invalid exponent `{exp}`")))?;
            if exponent == 0 {
                return Err(syntax_err(line, col, "zero exponent is not allowed"));
            }
            Ok((name.to_owned(), exponent))
        }
    }
}

fn syntax<T>(line: usize, column: usize, message: &str) -> Result<T> {
    Err(syntax_err(line, column, message))
}

fn syntax_err(line: usize, column: usize, message: &str) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.to_owned(),
    }
}

/// Map between presentations, given by a word over the source generators
/// for each target generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PresentationMorphism {
    source: GroupPresentation,
    target: GroupPresentation,
    images: Vec<Word>, // aligned with target.generators
}

impl PresentationMorphism {
    pub fn new(
        source: GroupPresentation,
        target: GroupPresentation,
        images: Vec<(GeneratorId, Word)>,
    ) -> Result<Self> {
        let mut aligned: Vec<Option<Word>> = vec![None; target.generators().len()];
        for (g, word) in images {
            let idx = target.generator_index(&g).ok_or_else(|| Error::MorphismImages {
                message: format!("`{g}` is not a target generator"),
            })?;
            if aligned[idx].is_some() {
                return Err(Error::MorphismImages {
                    message: format!("two images given for `{g}`"),
                });
            }
            for letter in word.letters() {
                if source.generator_index(&letter.generator).is_none() {
                    return Err(Error::MorphismImages {
                        message: format!(
                            "image of `{g}` uses `{}` which is not a source generator",
                            letter.generator
                        ),
                    });
                }
            }
            aligned[idx] = Some(word);
        }
        let images = aligned
            .into_iter()
            .enumerate()
            .map(|(i, w)| {
                w.ok_or_else(|| Error::MorphismImages {
                    message: format!("no image for `{}`", target.generators()[i]),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(PresentationMorphism {
            source,
            target,
            images,
        })
    }

    /// The identity morphism of a presentation.
    pub fn identity(p: &GroupPresentation) -> Self {
        let images = p
            .generators()
            .iter()
            .map(|g| Word::from_letters([Letter::new(g.clone(), Sign::Plus)]))
            .collect();
        PresentationMorphism {
            source: p.clone(),
            target: p.clone(),
            images,
        }
    }

    pub fn source(&self) -> &GroupPresentation {
        &self.source
    }

    pub fn target(&self) -> &GroupPresentation {
        &self.target
    }

    pub fn image(&self, g: &GeneratorId) -> Option<&Word> {
        self.target.generator_index(g).map(|i| &self.images[i])
    }

    /// Composition `self` then `next`: for morphisms P -> Q and Q -> R this
    /// produces P -> R by substituting `self`'s images into `next`'s.
    pub fn compose(&self, next: &PresentationMorphism) -> Result<PresentationMorphism> {
        if self.target != next.source {
            return Err(Error::PresentationMismatch {
                expected: self.target.name().to_owned(),
                found: next.source.name().to_owned(),
            });
        }
        let images = next
            .images
            .iter()
            .map(|w| w.substitute(|g| self.image(g)))
            .collect::<Result<Vec<_>>>()?;
        Ok(PresentationMorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            images,
        })
    }
}

/// One conjugated relator factor `a^-1 r^±1 a` of a decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecompositionFactor {
    pub conjugator: Word,
    pub relator_index: usize,
    pub sign: Sign,
}

/// User-supplied decomposition of a word as a product of conjugated
/// relators. These are accepted and checked but never searched for.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct RelatorDecomposition {
    pub factors: Vec<DecompositionFactor>,
}

impl RelatorDecomposition {
    /// Multiplies the factors out and reduces.
    pub fn product(&self, presentation: &GroupPresentation) -> Result<Word> {
        let mut acc = Word::empty();
        for factor in &self.factors {
            let relator = presentation
                .relators()
                .get(factor.relator_index)
                .ok_or_else(|| Error::Format(format!(
                    "relator index {} out of range",
                    factor.relator_index
                )))?;
            let body = match factor.sign {
                Sign::Plus => relator.clone(),
                Sign::Minus => relator.inverse(),
            };
            let conjugated = factor
                .conjugator
                .inverse()
                .concat(&body)
                .concat(&factor.conjugator);
            acc = acc.concat(&conjugated);
        }
        Ok(acc)
    }

    /// Checks that the decomposition multiplies out to `target` as a word.
    pub fn verifies(&self, presentation: &GroupPresentation, target: &Word) -> Result<bool> {
        Ok(&self.product(presentation)? == target)
    }
}

/// Built-in presentation families.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Builtin {
    /// Fundamental group of the closed oriented surface of the given genus:
    /// generators a1, b1, ..., am, bm and the single relator
    /// `a1 b1 a1^-1 b1^-1 ... am bm am^-1 bm^-1`.
    Surface { genus: u32 },
    /// `<a, b, c | a c a^-1 c^-1, b^2, (a b)^2>`.
    GammaNoAga,
    /// `<a, b | b^2, (a b)^2>`, the infinite dihedral group.
    HInfiniteDihedral,
    /// Free abelian group of the given rank, one commutator relator per
    /// generator pair.
    FreeAbelian { rank: u32 },
    /// Free group of the given rank, no relators.
    Free { rank: u32 },
}

impl Builtin {
    /// Resolves a key/parameter pair as used by the CLI.
    pub fn from_key(key: &str, parameter: Option<u32>) -> Result<Builtin> {
        let need = |what: &str| -> Result<u32> {
            match parameter {
                Some(p) if p >= 1 => Ok(p),
                Some(p) => Err(Error::BuiltinParameter {
                    key: key.to_owned(),
                    message: format!("{what} must be >= 1, got {p}"),
                }),
                None => Err(Error::BuiltinParameter {
                    key: key.to_owned(),
                    message: format!("missing {what}"),
                }),
            }
        };
        let none = |b: Builtin| -> Result<Builtin> {
            match parameter {
                None => Ok(b),
                Some(_) => Err(Error::BuiltinParameter {
                    key: key.to_owned(),
                    message: "takes no parameter".to_owned(),
                }),
            }
        };
        match key {
            "surface" => Ok(Builtin::Surface { genus: need("genus")? }),
            "gamma_no_aga" => none(Builtin::GammaNoAga),
            "h_infinite_dihedral" => none(Builtin::HInfiniteDihedral),
            "free_abelian" => Ok(Builtin::FreeAbelian { rank: need("rank")? }),
            "free" => Ok(Builtin::Free { rank: need("rank")? }),
            _ => Err(Error::UnknownBuiltin {
                key: key.to_owned(),
            }),
        }
    }

    pub fn presentation(&self) -> GroupPresentation {
        match *self {
            Builtin::Surface { genus } => {
                let m = genus as usize;
                let mut gens = Vec::with_capacity(2 * m);
                for i in 1..=m {
                    gens.push(gen(&format!("a{i}")));
                    gens.push(gen(&format!("b{i}")));
                }
                let mut letters = Vec::with_capacity(4 * m);
                for i in 0..m {
                    letters.extend(commutator_letters(&gens[2 * i], &gens[2 * i + 1]));
                }
                let relator = Word::from_letters(letters);
                GroupPresentation::new(&format!("surface_{genus}"), gens, vec![relator])
                    .expect("builtin surface presentation is valid")
            }
            Builtin::GammaNoAga => {
                let a = gen("a");
                let b = gen("b");
                let c = gen("c");
                let relators = vec![
                    Word::from_letters(commutator_letters(&a, &c)),
                    Word::from_letters(vec![plus(&b), plus(&b)]),
                    Word::from_letters(vec![plus(&a), plus(&b), plus(&a), plus(&b)]),
                ];
                GroupPresentation::new("gamma_no_aga", vec![a, b, c], relators)
                    .expect("builtin gamma presentation is valid")
            }
            Builtin::HInfiniteDihedral => {
                let a = gen("a");
                let b = gen("b");
                let relators = vec![
                    Word::from_letters(vec![plus(&b), plus(&b)]),
                    Word::from_letters(vec![plus(&a), plus(&b), plus(&a), plus(&b)]),
                ];
                GroupPresentation::new("h_infinite_dihedral", vec![a, b], relators)
                    .expect("builtin dihedral presentation is valid")
            }
            Builtin::FreeAbelian { rank } => {
                let k = rank as usize;
                let gens: Vec<_> = (1..=k).map(|i| gen(&format!("g{i}"))).collect();
                let mut relators = Vec::new();
                for i in 0..k {
                    for j in (i + 1)..k {
                        relators.push(Word::from_letters(commutator_letters(&gens[i], &gens[j])));
                    }
                }
                GroupPresentation::new(&format!("free_abelian_{rank}"), gens, relators)
                    .expect("builtin free abelian presentation is valid")
            }
            Builtin::Free { rank } => {
                let gens: Vec<_> = (1..=rank as usize).map(|i| gen(&format!("g{i}"))).collect();
                GroupPresentation::new(&format!("free_{rank}"), gens, Vec::new())
                    .expect("builtin free presentation is valid")
            }
        }
    }
}

/// Convenience wrapper over [`Builtin::from_key`] + [`Builtin::presentation`].
pub fn builtin_presentation(key: &str, parameter: Option<u32>) -> Result<GroupPresentation> {
    Ok(Builtin::from_key(key, parameter)?.presentation())
}

fn gen(name: &str) -> GeneratorId {
    GeneratorId::new(name).expect("builtin generator names are valid")
}

fn plus(g: &GeneratorId) -> Letter {
    Letter::new(g.clone(), Sign::Plus)
}

fn minus(g: &GeneratorId) -> Letter {
    Letter::new(g.clone(), Sign::Minus)
}

fn commutator_letters(g: &GeneratorId, h: &GeneratorId) -> Vec<Letter> {
    vec![plus(g), plus(h), minus(g), minus(h)]
}

#[cfg(test)]
mod tests {
    use super::*;

    fn letter(name: &str, sign: Sign) -> Letter {
        Letter::new(GeneratorId::new(name).unwrap(), sign)
    }

    #[test]
    fn parse_single_relator() {
        let p = GroupPresentation::parse("group G\ngens a\nrel a^2").unwrap();
        assert_eq!(p.name(), "G");
        assert_eq!(p.generators().len(), 1);
        assert_eq!(p.relators().len(), 1);
        assert_eq!(
            p.relators()[0].letters(),
            &[letter("a", Sign::Plus), letter("a", Sign::Plus)]
        );
    }

    #[test]
    fn parse_gamma() {
        let text = "group Gamma\ngens a b c\nrel a c a^-1 c^-1\nrel b^2\nrel a b a b";
        let p = GroupPresentation::parse(text).unwrap();
        assert_eq!(p.generators().len(), 3);
        assert_eq!(p.relators().len(), 3);
        assert_eq!(p, Builtin::GammaNoAga.presentation().clone_with_name("Gamma"));
    }

    #[test]
    fn parse_rejects_empty_relator() {
        let err = GroupPresentation::parse("group Z\ngens a\nrel a a^-1").unwrap_err();
        assert!(matches!(err, Error::EmptyRelator { line: 3 }));
    }

    #[test]
    fn parse_rejects_undeclared_generator() {
        let err = GroupPresentation::parse("group G\ngens a\nrel a b").unwrap_err();
        assert!(matches!(err, Error::UndeclaredGenerator { ref name, line: 3 } if name == "b"));
    }

    #[test]
    fn parse_reports_line_and_column() {
        let err = GroupPresentation::parse("group G\ngens a\nrel a^x").unwrap_err();
        match err {
            Error::Syntax { line, column, .. } => {
                assert_eq!(line, 3);
                assert_eq!(column, 5);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn parse_ignores_blank_and_comment_lines() {
        let p =
            GroupPresentation::parse("# header\n\ngroup G\n  # inline\ngens a b\n\nrel a b a^-1 b^-1\n")
                .unwrap();
        assert_eq!(p.relators().len(), 1);
    }

    #[test]
    fn free_reduce_cancels() {
        let w = Word::from_letters(vec![letter("a", Sign::Plus), letter("a", Sign::Minus)]);
        assert!(w.is_empty());

        let w = Word::from_letters(vec![
            letter("a", Sign::Plus),
            letter("b", Sign::Plus),
            letter("b", Sign::Minus),
            letter("a", Sign::Plus),
        ]);
        assert_eq!(w.letters(), &[letter("a", Sign::Plus), letter("a", Sign::Plus)]);
    }

    #[test]
    fn free_reduce_is_idempotent_on_reduced_words() {
        let w = Word::from_letters(vec![letter("a", Sign::Plus), letter("b", Sign::Minus)]);
        let again = Word::from_letters(w.letters().to_vec());
        assert_eq!(w, again);
    }

    #[test]
    fn invert_word_examples() {
        let w = Word::from_letters(vec![letter("a", Sign::Plus), letter("b", Sign::Plus)]);
        assert_eq!(
            w.inverse().letters(),
            &[letter("b", Sign::Minus), letter("a", Sign::Minus)]
        );
        assert!(Word::empty().inverse().is_empty());
        let sq = Word::from_letters(vec![letter("a", Sign::Plus), letter("a", Sign::Plus)]);
        assert_eq!(
            sq.inverse().letters(),
            &[letter("a", Sign::Minus), letter("a", Sign::Minus)]
        );
    }

    #[test]
    fn builtin_shapes() {
        let s2 = Builtin::Surface { genus: 2 }.presentation();
        assert_eq!(s2.generators().len(), 4);
        assert_eq!(s2.relators().len(), 1);
        assert_eq!(s2.relators()[0].len(), 8);

        let f3 = Builtin::Free { rank: 3 }.presentation();
        assert_eq!(f3.generators().len(), 3);
        assert!(f3.relators().is_empty());

        let gamma = Builtin::GammaNoAga.presentation();
        assert_eq!(gamma.relators()[0].to_text(), "a c a^-1 c^-1");
        assert_eq!(gamma.relators()[1].to_text(), "b^2");
        assert_eq!(gamma.relators()[2].to_text(), "a b a b");

        // surface(1) matches free_abelian(2) up to generator naming
        let s1 = Builtin::Surface { genus: 1 }.presentation();
        let z2 = Builtin::FreeAbelian { rank: 2 }.presentation();
        assert_eq!(s1.relators().len(), z2.relators().len());
        assert_eq!(s1.relators()[0].len(), z2.relators()[0].len());
    }

    #[test]
    fn builtin_key_resolution() {
        assert!(matches!(
            Builtin::from_key("surface", Some(2)),
            Ok(Builtin::Surface { genus: 2 })
        ));
        assert!(Builtin::from_key("surface", None).is_err());
        assert!(Builtin::from_key("surface", Some(0)).is_err());
        assert!(Builtin::from_key("gamma_no_aga", Some(1)).is_err());
        assert!(matches!(
            Builtin::from_key("nope", None),
            Err(Error::UnknownBuiltin { .. })
        ));
    }

    #[test]
    fn round_trip_builtins() {
        let builtins = [
            Builtin::Surface { genus: 1 },
            Builtin::Surface { genus: 3 },
            Builtin::GammaNoAga,
            Builtin::HInfiniteDihedral,
            Builtin::FreeAbelian { rank: 3 },
            Builtin::Free { rank: 2 },
        ];
        for b in builtins {
            let p = b.presentation();
            let again = GroupPresentation::parse(&p.to_text()).unwrap();
            assert_eq!(p, again);
        }
    }

    #[test]
    fn morphism_identity_and_compose() {
        let z2 = Builtin::FreeAbelian { rank: 2 }.presentation();
        let id = PresentationMorphism::identity(&z2);
        let composed = id.compose(&id).unwrap();
        assert_eq!(composed, id);
    }

    #[test]
    fn morphism_rejects_missing_image() {
        let z2 = Builtin::FreeAbelian { rank: 2 }.presentation();
        let g1 = GeneratorId::new("g1").unwrap();
        let w = Word::from_letters(vec![Letter::new(g1.clone(), Sign::Plus)]);
        let err = PresentationMorphism::new(z2.clone(), z2, vec![(g1, w)]).unwrap_err();
        assert!(matches!(err, Error::MorphismImages { .. }));
    }

    #[test]
    fn relator_decomposition_verifies() {
        let gamma = Builtin::GammaNoAga.presentation();
        let a = GeneratorId::new("a").unwrap();
        // a^-1 (b^2) a, conjugate of relator 1
        let decomposition = RelatorDecomposition {
            factors: vec![DecompositionFactor {
                conjugator: Word::from_letters(vec![Letter::new(a.clone(), Sign::Plus)]),
                relator_index: 1,
                sign: Sign::Plus,
            }],
        };
        let target = Word::from_letters(vec![
            Letter::new(a.clone(), Sign::Minus),
            letter("b", Sign::Plus),
            letter("b", Sign::Plus),
            Letter::new(a, Sign::Plus),
        ]);
        assert!(decomposition.verifies(&gamma, &target).unwrap());
        assert!(!decomposition.verifies(&gamma, &Word::empty()).unwrap());
    }

    impl GroupPresentation {
        fn clone_with_name(&self, name: &str) -> GroupPresentation {
            GroupPresentation::new(name, self.generators.clone(), self.relators.clone()).unwrap()
        }
    }
}
