
import sys
import os
import traceback

# 프로젝트 루트를 sys.path에 추가
sys.path.append(os.path.abspath(os.path.join(os.path.dirname(__file__), '..')))

FACADES = {
    'src.core.formula': 'parse',
    'src.core.matrix': 'MatrixChecker',
    'src.core.kripke': 'KripkeSearcher',
    'src.core.hilbert': 'ProofChecker',
    'src.core.crosscheck': 'CrossChecker',
    'src.cli': 'main',
}


def test_module(module_name):
    print(f"Testing {module_name}...")
    try:
        module = __import__(module_name, fromlist=[FACADES[module_name]])
        getattr(module, FACADES[module_name])
        print(f"  [OK] {module_name} imported")
        return True
    except Exception:
        print(f"  [FAIL] {module_name}")
        traceback.print_exc()
        return False


def test_acceptance_smoke():
    print("Testing paraconsistency smoke...")
    try:
        from src.core.formula import parse
        from src.core.matrix import entails_matrix, lookup_matrix

        verdict = entails_matrix(lookup_matrix('D2M-3'), [parse('p', 'Lr-'), parse('~p', 'Lr-')], parse('q', 'Lr-'))
        if verdict.holds:
            print("  [FAIL] {p, ~p} |= q should fail in D2M-3")
            return False
        print(f"  [OK] {verdict.to_text().replace(chr(10), ' ')}")
        return True
    except Exception:
        print("  [FAIL] smoke")
        traceback.print_exc()
        return False


if __name__ == "__main__":
    failed = False
    for module in FACADES:
        if not test_module(module):
            failed = True
    if not test_acceptance_smoke():
        failed = True

    if failed:
        sys.exit(1)
    else:
        print("\nAll modules verified successfully!")
        sys.exit(0)
