//! Single-character rendering of small integers: 0-9 then lowercase letters,
//! so `10 -> 'a'`, `20 -> 'k'`. All text output in the crate uses this.

pub fn digit_char(v: u8) -> char {
    match v {
        0..=9 => (b'0' + v) as char,
        10..=35 => (b'a' + v - 10) as char,
        _ => panic!("digit {v} out of single-character range"),
    }
}

pub fn digit_value(c: char) -> Option<u8> {
    match c {
        '0'..='9' => Some(c as u8 - b'0'),
        'a'..='z' => Some(c as u8 - b'a' + 10),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn roundtrip() {
        for v in 0..36 {
            assert_eq!(digit_value(digit_char(v)), Some(v));
        }
        assert_eq!(digit_char(10), 'a');
        assert_eq!(digit_char(20), 'k');
        assert_eq!(digit_value('='), None);
    }
}
