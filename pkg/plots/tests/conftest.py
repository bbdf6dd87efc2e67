import os

import pytest

os.environ.setdefault("MPLBACKEND", "Agg")


CURVE_HEADER = "# bin_low,bin_high,value,count\n"
TRIALS_HEADER = ("# trial,size,fraction,r_used,g_hat,g_true,ratio,"
                 "g_emp,ratio_emp\n")


@pytest.fixture
def write_csv(tmp_path):
    def _write(name, text):
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write


@pytest.fixture
def curve_with_gaps(write_csv):
    # occupied buckets at [30,40) and [80,90); the rest are gaps
    rows = []
    for i in range(10):
        lo, hi = 10 * i, 10 * (i + 1)
        if i == 3:
            rows.append(f"{lo},{hi},1,3")
        elif i == 8:
            rows.append(f"{lo},{hi},0,1")
        else:
            rows.append(f"{lo},{hi},,0")
    return write_csv("fig1_star_mean.csv", CURVE_HEADER + "\n".join(rows) + "\n")


@pytest.fixture
def star_histogram(write_csv):
    # star-of-4 gains: hub 1/3 in [0,1), leaves in [2,4); plus unbounded rows
    body = (",0,0,0\n"
            "0,1,1,1\n"
            "1,2,0,0\n"
            "2,4,3,3\n"
            "4,,0,0\n")
    return write_csv("fig3_star_mean.csv", CURVE_HEADER + body)


@pytest.fixture
def mean_gain_curve(write_csv):
    body = ("0,50,2.0,2\n"
            "50,100,0.5,1\n")
    return write_csv("fig4_path_mean.csv", CURVE_HEADER + body)


@pytest.fixture
def trials_table(write_csv):
    rows = []
    t = 0
    for size in (1000, 2000):
        for i in range(20):
            ratio = 1.0 + (i - 10) * 0.01
            rows.append(f"{i},{size},0.15,150,{ratio * 1.4:.6f},1.4,"
                        f"{ratio:.6f},1.39,{ratio:.6f}")
            t += 1
    return write_csv("fig5_sw.csv", TRIALS_HEADER + "\n".join(rows) + "\n")
