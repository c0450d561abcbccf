//! Figure-to-command mapping.
//!
//! Each published plot of the angular distributions, polarization fractions
//! and derived characteristics is a grid scan. [`FIGURES`] lists, for every
//! figure number, the `synrad` command lines that regenerate its curves
//! (one line per particle or polarization label where a figure overlays
//! several families). Output is CSV intended for an external plotting tool.
//!
//! | figure | content |
//! |---|---|
//! | 1 | half-plane fractions q_1, q_2 against β, both particles |
//! | 2, 3 | p_2 for the boson and the electron |
//! | 4, 5 | p_3 |
//! | 6, 7 | p_1 |
//! | 8, 9 | p_0 |
//! | 10 | angle of the interior maximum, s = 0, 1, 3 |
//! | 11 | height of the maximum, s = 0, 1, 2, 3 |
//! | 12 | effective angles, s = 0..3, both particles |
//! | 13, 14 | local circular fraction q_1 for boson and electron |
//! | 15, 16 | local linear fraction q_2 |

/// One reproducible figure.
#[derive(Debug, Clone, Copy)]
pub struct FigureScan {
    pub figure: u8,
    pub title: &'static str,
    /// Command lines, without the program name.
    pub invocations: &'static [&'static str],
}

#[rustfmt::skip]
pub const FIGURES: &[FigureScan] = &[
    FigureScan { figure: 1, title: "half-plane polarization fractions q_s(beta), s = 1, 2", invocations: &[
        "polarization --particle boson --s 1 --beta 0:1:21",
        "polarization --particle boson --s 2 --beta 0:1:21",
        "polarization --particle electron --s 1 --beta 0:1:21",
        "polarization --particle electron --s 2 --beta 0:1:21",
    ]},
    FigureScan { figure: 2, title: "boson p_2(beta; theta)", invocations: &[
        "scan --quantity p --particle boson --s 2 --beta 0,0.3,0.4,0.5,0.6,0.7,0.8,0.9,1 --theta 0:pi:181",
    ]},
    FigureScan { figure: 3, title: "electron p_2(beta; theta)", invocations: &[
        "scan --quantity p --particle electron --s 2 --beta 0,0.3,0.5,0.6,0.8,0.9,0.99999,1 --theta 0:pi:181",
    ]},
    FigureScan { figure: 4, title: "boson p_3(beta; theta)", invocations: &[
        "scan --quantity p --particle boson --s 3 --beta 0,0.6,0.8,0.9,1 --theta 0:pi:181",
    ]},
    FigureScan { figure: 5, title: "electron p_3(beta; theta)", invocations: &[
        "scan --quantity p --particle electron --s 3 --beta 0,0.4,0.7,0.8660254037844386,0.96,0.99,0.999,1 --theta 0:pi:181",
    ]},
    FigureScan { figure: 6, title: "boson p_1(beta; theta)", invocations: &[
        "scan --quantity p --particle boson --s 1 --beta 0,0.7,0.9,1 --theta 0:pi:181",
    ]},
    FigureScan { figure: 7, title: "electron p_1(beta; theta)", invocations: &[
        "scan --quantity p --particle electron --s 1 --beta 0,0.1,0.6,0.7071067811865476,0.8,0.9,0.96,0.99,0.999 --theta 0:pi:181",
    ]},
    FigureScan { figure: 8, title: "boson p_0(beta; theta)", invocations: &[
        "scan --quantity p --particle boson --s 0 --beta 0,0.7,0.9,1 --theta 0:pi:181",
    ]},
    FigureScan { figure: 9, title: "electron p_0(beta; theta)", invocations: &[
        "scan --quantity p --particle electron --s 0 --beta 0,0.4,0.6,0.7071067811865476,0.8,0.9,0.96,0.99,1 --theta 0:pi:181",
    ]},
    FigureScan { figure: 10, title: "angle of the interior maximum, s = 0, 1, 3", invocations: &[
        "maxima --s 0 --beta 0.75:0.99:9",
        "maxima --s 1 --beta 0.75:0.99:9",
        "maxima --s 3 --beta 0.9:0.99:9",
    ]},
    FigureScan { figure: 11, title: "maximum value of the electron densities, s = 0..3", invocations: &[
        "maxima --s 0 --beta 0:0.99:12",
        "maxima --s 1 --beta 0:0.99:12",
        "maxima --s 2 --beta 0:0.99:12",
        "maxima --s 3 --beta 0:0.99:12",
    ]},
    FigureScan { figure: 12, title: "effective angles, s = 0..3", invocations: &[
        "scan --quantity eff_angle --particle boson --s 0 --beta 0:0.99:12",
        "scan --quantity eff_angle --particle boson --s 1 --beta 0:0.99:12",
        "scan --quantity eff_angle --particle boson --s 2 --beta 0:0.99:12",
        "scan --quantity eff_angle --particle boson --s 3 --beta 0:0.99:12",
        "scan --quantity eff_angle --particle electron --s 0 --beta 0:0.99:12",
        "scan --quantity eff_angle --particle electron --s 1 --beta 0:0.99:12",
        "scan --quantity eff_angle --particle electron --s 2 --beta 0:0.99:12",
        "scan --quantity eff_angle --particle electron --s 3 --beta 0:0.99:12",
    ]},
    FigureScan { figure: 13, title: "boson local q_1(beta; theta)", invocations: &[
        "scan --quantity q_local --particle boson --s 1 --beta 0,0.7,0.9,1 --theta 0:pi:181",
    ]},
    FigureScan { figure: 14, title: "electron local q_1(beta; theta)", invocations: &[
        "scan --quantity q_local --particle electron --s 1 --beta 0,0.8,0.95,0.99,0.999,0.999999 --theta 0:pi:181",
    ]},
    FigureScan { figure: 15, title: "boson local q_2(beta; theta)", invocations: &[
        "scan --quantity q_local --particle boson --s 2 --beta 0,0.7,0.9,1 --theta 0:pi:181",
    ]},
    FigureScan { figure: 16, title: "electron local q_2(beta; theta)", invocations: &[
        "scan --quantity q_local --particle electron --s 2 --beta 0,0.8,0.95,0.99,0.999,0.9999,0.999999 --theta 0:pi:181",
    ]},
];

/// Look up a figure by number.
pub fn figure(number: u8) -> Option<&'static FigureScan> {
    FIGURES.iter().find(|f| f.figure == number)
}

/// Full argv (program name first) for each curve family of a figure.
pub fn argv(fig: &FigureScan) -> Vec<Vec<String>> {
    fig.invocations
        .iter()
        .map(|cmd| {
            std::iter::once("synrad")
                .chain(cmd.split_whitespace())
                .map(String::from)
                .collect()
        })
        .collect()
}
