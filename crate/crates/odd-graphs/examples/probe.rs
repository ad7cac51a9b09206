use odd_graphs::{Bitstring, DyckWord, Germ, canonical_rotation};

fn ranks(label: &str, b: &Bitstring, all_words: &[DyckWord]) {
    if b.weight() != 10 { println!("{label}: weight {} skip", b.weight()); return; }
    let cf = canonical_rotation(b).unwrap();
    let gr = cf.germ.rank();
    let canon = odd_graphs::bitstring_of_germ(&cf.germ);
    let word = DyckWord::new(Bitstring::new(20, canon.mask() >> 1)).unwrap();
    let dl = all_words.iter().position(|w| *w == word).unwrap() as u64;
    let n = 16796u64;
    println!("{label}: germ rank {gr} (desc {}), dyck-lex {dl} (desc {})", n-1-gr, n-1-dl);
}

fn main() {
    let all_words = DyckWord::enumerate(10);
    let b: Bitstring = "000011010001111010011".parse().unwrap();
    ranks("identity", &b, &all_words);
    ranks("reverse", &b.reverse(), &all_words);
    let word = Bitstring::new(20, b.mask() >> 1);
    ranks("word-reverse+0", &DyckWord::new(word.reverse().complement()).unwrap().vertex_form(), &all_words);
    // complement of word, canonicalized as 21-string 0||comp
    let comp = word.complement();
    ranks("word-comp+0", &Bitstring::new(21, comp.mask() << 1), &all_words);
    // colex: sort words by reversed string
    let mut colex: Vec<(String, usize)> = all_words.iter().enumerate()
        .map(|(i, w)| (w.bits().reverse().to_string(), i)).collect();
    colex.sort();
    let target = DyckWord::new(Bitstring::new(20, b.mask() >> 1)).unwrap();
    let tpos = all_words.iter().position(|w| *w == target).unwrap();
    let cpos = colex.iter().position(|(_, i)| *i == tpos).unwrap();
    println!("dyck colex {} (desc {})", cpos, 16795 - cpos);
    // germs sorted by underlying mask integer
    let all = Germ::all(10).unwrap();
    let mut bym: Vec<(u64, u64)> = all.iter().map(|g| (odd_graphs::bitstring_of_germ(g).mask(), g.rank())).collect();
    bym.sort();
    let g = canonical_rotation(&b).unwrap().germ;
    let maskpos = bym.iter().position(|(_, r)| *r == g.rank()).unwrap();
    println!("mask-int order {} (desc {})", maskpos, 16795 - maskpos);
}
