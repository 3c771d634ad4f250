/// `println!` that reports write failures instead of panicking.
#[macro_export]
macro_rules! emit {
    ($($arg:tt)*) => {{
        use std::io::Write as _;
        writeln!(std::io::stdout(), $($arg)*).map_err($crate::error::CliError::from)
    }};
}

/// Formats `x` to 10 significant digits, trimming trailing zeros but
/// keeping at least one fractional digit: `6.0`, `9.464101615`.
pub fn sig10(x: f64) -> String {
    if !x.is_finite() {
        return x.to_string();
    }
    if x == 0.0 {
        return "0.0".into();
    }
    let exponent = format!("{x:.9e}")
        .split_once('e')
        .and_then(|(_, e)| e.parse::<i32>().ok())
        .unwrap_or(0);
    let decimals = (9 - exponent).max(0) as usize;
    let mut s = format!("{x:.decimals$}");
    if s.contains('.') {
        while s.ends_with('0') {
            s.pop();
        }
        if s.ends_with('.') {
            s.push('0');
        }
    } else {
        s.push_str(".0");
    }
    if s == "-0.0" {
        s = "0.0".into();
    }
    s
}
