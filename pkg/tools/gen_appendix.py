"""Generate ``src/gaudin_hopf/_appendix.py`` from the LaTeX coefficient tables of the workspace source document.

Run from the repository root: ``python3 tools/gen_appendix.py``.  Needs sympy;
the generated module does not.
"""
import pathlib
import re

import sympy as sp
from sympy.printing.pycode import PythonCodePrinter
from sympy.parsing.sympy_parser import parse_expr, standard_transformations, implicit_multiplication_application, convert_xor

ROOT = pathlib.Path(__file__).resolve().parents[1]
src = (ROOT / 'paper.md').read_text()
start = src.index('\\section{Coefficients from Theorem')
app = src[start:]

def grab(label):
    m = re.search(r'(?<![a-zA-Z])' + re.escape(label) + r'\s*=', app)
    j = app.index('\\end{align*}', m.end())
    return app[m.end():j]

def braced(s, i):
    # s[i] == '{'; return (content, index after closing)
    depth = 0
    for k in range(i, len(s)):
        if s[k] == '{': depth += 1
        elif s[k] == '}':
            depth -= 1
            if depth == 0:
                return s[i+1:k], k+1
    raise ValueError

def defrac(s):
    while '\\frac' in s:
        i = s.index('\\frac')
        a, j = braced(s, i+5)
        b, k = braced(s, j)
        s = s[:i] + '((' + a + ')/(' + b + '))' + s[k:]
    return s

def conv(tex):
    s = tex.replace('\n', ' ')
    s = s.replace('\\\\&', ' ').replace('&', ' ').replace('\\\\', ' ')
    s = s.replace('\\big(', '(').replace('\\big)', ')')
    s = s.replace('{}^', '^')
    s = defrac(s)
    s = re.sub(r'([Rt])_\{(\d)\}', r'\1_\2', s)
    s = re.sub(r'\\sqrt\{\s*R_(\d)\s*R_(\d)\s*\}', r' sqrt(R\1*R\2) ', s)
    s = re.sub(r'\\sqrt\{R_(\d)\}', r' sqrt(R\1) ', s)
    s = re.sub(r'([Rt])_(\d)', r' \1\2 ', s)
    s = re.sub(r'\^\{(\d+)/(\d+)\}', r'**(S(\1)/\2)', s)
    s = re.sub(r'\^\{(\d+)\}', r'**\1', s)
    s = re.sub(r'\^(\d)', r'**\1', s)
    assert '\\' not in s, s[:200]
    s = s.replace('{', '(').replace('}', ')')
    s = s.strip().rstrip(',').rstrip('.')
    return s

syms = {n: sp.Symbol(n) for n in 'R1 R2 w t0 t1 t2 t3 t4'.split()}
syms['S'] = sp.S; syms['sqrt'] = sp.sqrt
tr = standard_transformations + (implicit_multiplication_application, convert_xor)
def parse(tex):
    return parse_expr(conv(tex), local_dict=syms, transformations=tr)

LABELS = {'at1': r'\tilde{a}_{1}', 'b': 'b', 'at2': r'\tilde{a}_{2}', 'at3n': r'\tilde{a}_{3}^{n}', 'at3d': r'\tilde{a}_{3}^{d}',
          'at4': r'\tilde{a}_{4}', 'at5': r'\tilde{a}_{5}'}
for n in '678':
    LABELS['at%sn'%n] = r'\tilde{a}_{%s}^{n}'%n; LABELS['at%sd'%n] = r'\tilde{a}_{%s}^{d}'%n
LABELS.update({'e1n': 'e_{1}^{n}', 'e1d': 'e_{1}^{d}', 'e2': 'e_{2}', 'e3': 'e_{3}'})
for n in '123456':
    LABELS['f%sn'%n] = 'f_{%s}^{n}'%n; LABELS['f%sd'%n] = 'f_{%s}^{d}'%n

def all_exprs():
    return {k: parse(grab(v)) for k, v in LABELS.items()}


class _Printer(PythonCodePrinter):
    def _print_Rational(self, expr):
        return f"Fraction({expr.p}, {expr.q})"

    def _print_Half(self, expr):
        return "Fraction(1, 2)"


ORDER = ['b', 'at1', 'at2', 'at3n', 'at3d', 'at4', 'at5', 'at6n', 'at6d', 'at7n', 'at7d', 'at8n', 'at8d',
         'e1n', 'e1d', 'e2', 'e3'] + [f'f{i}{x}' for i in range(1, 7) for x in 'nd']


def main():
    s1, s2 = sp.symbols('s1 s2', positive=True)
    exprs = all_exprs()
    pr = _Printer()
    lines = [
        '"""Appendix coefficient formulas, generated by tools/gen_appendix.py. Do not edit.',
        '',
        'Every entry is a function of the eight parameters plus s1 = sqrt(R1) and',
        's2 = sqrt(R2); half-integer powers of R1, R2 are written through s1, s2 so',
        'that exact rational evaluation is possible when both are rational squares.',
        '"""',
        'from fractions import Fraction',
        '',
        '',
        'def evaluate(R1, R2, w, t0, t1, t2, t3, t4, s1, s2):',
        '    """Return a dict of the printed numerators/denominators and plain entries."""',
        '    out = {}',
    ]
    for k in ORDER:
        e = exprs[k].subs({sp.Symbol('R1'): s1 ** 2, sp.Symbol('R2'): s2 ** 2})
        e = sp.powsimp(e, force=True)
        code = pr.doprint(e)
        code = code.replace('math.sqrt', 'SQRT_NOT_EXPECTED')
        assert 'sqrt' not in code.lower(), (k, code[:200])
        lines.append(f'    out[{k!r}] = {code}')
    lines.append('    return out')
    lines.append('')
    (ROOT / 'src' / 'gaudin_hopf' / '_appendix.py').write_text('\n'.join(lines))


if __name__ == '__main__':
    main()
