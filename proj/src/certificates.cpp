#include "wzs/wzpair.hpp"

// The certificate registry: every WZ pair printed with the ten identities,
// transcribed verbatim. A failing exact check here is recorded as a defect,
// never patched: the numeric identity checks are certificate-independent.

namespace wzs {

namespace {

const Rational kMinusHalf = rat(-1, 2);

BiPoly N() { return BiPoly::var_n(); }
BiPoly K() { return BiPoly::var_k(); }

WZPair make(const char* name, int id, const char* eq, HyperTerm B, RatFunc RF, RatFunc RG) {
    WZPair p;
    p.name = name;
    p.identity_id = id;
    p.source_eq = eq;
    p.B = std::move(B);
    p.RF = std::move(RF);
    p.RG = std::move(RG);
    return p;
}

std::vector<WZPair> build_all() {
    std::vector<WZPair> v;
    const BiPoly n = N(), k = K();

    // ---- identity 1 ----
    {
        // B = 1/(2^8n 2^4k) (2k)!^2 (2n)!^3 / ((n+k)!^2 k!^2 n!^4)
        HyperTerm B(rat(1), rat(1, 256), rat(1, 16), {});
        B.fact(0, 2, 0, +2).fact(2, 0, 0, +3).fact(1, 1, 0, -2).fact(0, 1, 0, -2).fact(1, 0, 0, -4);
        v.push_back(make("id1-pairA", 1, "(1)", B, RatFunc(8 * n), RatFunc(6 * n + 4 * k + 1)));
    }
    {
        // B = (-1)^k/(2^8n 2^4k) (2k)!(2n+2k)!(n-k-1/2)!(2n)!^2 / (k!(n+k)!^2 (n-1/2)! n!^4)
        HyperTerm B(rat(1), rat(1, 256), rat(-1, 16), {});
        B.fact(0, 2, 0, +1)
            .fact(2, 2, 0, +1)
            .fact(1, -1, kMinusHalf, +1)
            .fact(2, 0, 0, +2)
            .fact(0, 1, 0, -1)
            .fact(1, 1, 0, -2)
            .fact(1, 0, kMinusHalf, -1)
            .fact(1, 0, 0, -4);
        v.push_back(make("id1-pairB", 1, "(2)", B,
                         RatFunc(16 * n * n, 2 * n - 2 * k - 1),
                         RatFunc(6 * n + 2 * k + 1)));
    }

    // ---- identity 2 ----
    {
        // B = 1/(2^12n 2^4k) (2n+2k)!^2 (2n)!^3 / ((2n+k)!^2 (n+k)!^2 n!^4)
        HyperTerm B(rat(1), rat(1, 4096), rat(1, 16), {});
        B.fact(2, 2, 0, +2).fact(2, 0, 0, +3).fact(2, 1, 0, -2).fact(1, 1, 0, -2).fact(1, 0, 0, -4);
        v.push_back(make("id2-pairA", 2, "(3)", B, RatFunc(32 * n),
                         RatFunc((2 * n + 2 * k + 1).pow(2) * (42 * n + 4 * k + 5) -
                                     32 * k * n * (4 * n + 3 * k + 2),
                                 (2 * n + k + 1).pow(2))));
    }
    {
        // B = (-1)^k/(2^12n 2^4k) (2n+2k)!^2 (n-k-1/2)! (2n)!^2 / ((n+k)!^2 (2n+k)! (n-1/2)! n!^4)
        HyperTerm B(rat(1), rat(1, 4096), rat(-1, 16), {});
        B.fact(2, 2, 0, +2)
            .fact(1, -1, kMinusHalf, +1)
            .fact(2, 0, 0, +2)
            .fact(1, 1, 0, -2)
            .fact(2, 1, 0, -1)
            .fact(1, 0, kMinusHalf, -1)
            .fact(1, 0, 0, -4);
        v.push_back(make("id2-pairB", 2, "(4)", B,
                         RatFunc(128 * n * n, 2 * n - 2 * k - 1),
                         RatFunc((2 * n + 2 * k + 1) * (42 * n + 2 * k + 5) - 32 * k * n,
                                 2 * n + k + 1)));
    }

    // ---- identity 3 ----
    {
        // B = (-1)^n/(2^9n 2^6k) (2n+4k)!(2n)!^2 / ((n+2k)!(n+k)!^2 n!^3)
        HyperTerm B(rat(1), rat(-1, 512), rat(1, 64), {});
        B.fact(2, 4, 0, +1).fact(2, 0, 0, +2).fact(1, 2, 0, -1).fact(1, 1, 0, -2).fact(1, 0, 0, -3);
        v.push_back(make("id3-pairA", 3, "(5)", B, RatFunc(4 * n), RatFunc(6 * n + 4 * k + 1)));
    }
    {
        // B = (-1)^k/(2^9n 2^5k) (2n+2k)!^2 (n-k-1/2)! (2n)! / ((n+k)!^3 (n-1/2)! n!^3)
        HyperTerm B(rat(1), rat(1, 512), rat(-1, 32), {});
        B.fact(2, 2, 0, +2)
            .fact(1, -1, kMinusHalf, +1)
            .fact(2, 0, 0, +1)
            .fact(1, 1, 0, -3)
            .fact(1, 0, kMinusHalf, -1)
            .fact(1, 0, 0, -3);
        v.push_back(make("id3-pairB", 3, "(6)", B,
                         RatFunc(16 * n * n, 2 * n - 2 * k - 1),
                         RatFunc(6 * n + 2 * k + 1)));
    }

    // ---- identity 4 ----
    {
        // B = (-1)^n/(2^10n 2^4k) (2k)!(2n+2k)!(4n)! / ((2n+k)!(n+k)!^2 k! n!^2)
        HyperTerm B(rat(1), rat(-1, 1024), rat(1, 16), {});
        B.fact(0, 2, 0, +1)
            .fact(2, 2, 0, +1)
            .fact(4, 0, 0, +1)
            .fact(2, 1, 0, -1)
            .fact(1, 1, 0, -2)
            .fact(0, 1, 0, -1)
            .fact(1, 0, 0, -2);
        v.push_back(make("id4-pairA", 4, "(7)", B, RatFunc(4 * n),
                         RatFunc((2 * n + 2 * k + 1) * (20 * n + 4 * k + 3) - 16 * k * n,
                                 2 * n + k + 1)));
    }
    {
        // B = (-1)^k/(2^10n 2^6k) (2n+2k)!(4n+2k)!(n-k-1/2)! / ((2n+k)!(n+k)!^2 (n-1/2)! n!^2)
        HyperTerm B(rat(1), rat(1, 1024), rat(-1, 64), {});
        B.fact(2, 2, 0, +1)
            .fact(4, 2, 0, +1)
            .fact(1, -1, kMinusHalf, +1)
            .fact(2, 1, 0, -1)
            .fact(1, 1, 0, -2)
            .fact(1, 0, kMinusHalf, -1)
            .fact(1, 0, 0, -2);
        v.push_back(make("id4-pairB", 4, "(8)", B,
                         RatFunc(48 * n * n, 2 * n - 2 * k - 1),
                         RatFunc((2 * n + 2 * k + 1) * (20 * n + 2 * k + 3) - 24 * k * n,
                                 2 * n + 1)));
    }

    // ---- identity 5 ----
    {
        // B = (-1)^n/(2^15n 2^6k) (2n+4k)!(6n)! / ((2n+k)!(n+2k)!(n+k)! n! (3n)!)
        HyperTerm B(rat(1), rat(-1, 32768), rat(1, 64), {});
        B.fact(2, 4, 0, +1)
            .fact(6, 0, 0, +1)
            .fact(2, 1, 0, -1)
            .fact(1, 2, 0, -1)
            .fact(1, 1, 0, -1)
            .fact(1, 0, 0, -1)
            .fact(3, 0, 0, -1);
        v.push_back(make("id5-pairA", 5, "(9)", B, RatFunc(128 * n),
                         RatFunc((2 * n + 4 * k + 1) * (154 * n + 16 * k + 15) - 384 * k * n,
                                 2 * n + k + 1)));
    }
    {
        // B = (-1)^k/(2^15n 2^5k) (2n+2k)!(6n+2k)!(n-k-1/2)! / ((2n+k)!(3n+k)!(n+k)!(n-1/2)! n!^2)
        HyperTerm B(rat(1), rat(1, 32768), rat(-1, 32), {});
        B.fact(2, 2, 0, +1)
            .fact(6, 2, 0, +1)
            .fact(1, -1, kMinusHalf, +1)
            .fact(2, 1, 0, -1)
            .fact(3, 1, 0, -1)
            .fact(1, 1, 0, -1)
            .fact(1, 0, kMinusHalf, -1)
            .fact(1, 0, 0, -2);
        // G/B printed as a two-fraction bracket
        const RatFunc t1 = RatFunc((2 * n + 2 * k + 1) * (6 * n + 2 * k + 3) * (154 * n + 6 * k + 15),
                                   (2 * n + 1) * (6 * n + 3 * k + 3));
        const RatFunc t2 = RatFunc(rat(32, 3) * (k * n * (38 * n + 14 * k + 19)),
                                   (2 * n + 1) * (2 * n + k + 1));
        v.push_back(make("id5-pairB", 5, "(10)", B,
                         RatFunc(512 * n * n, 2 * n - 2 * k - 1), t1 - t2));
    }

    // ---- identity 6 ----
    {
        // B = (-1)^k 3^k/(2^8n 3^2n 2^6k) (2k)!(2n+2k)!(2n-k-1/2)!(4n)!
        //     / (k!(n+k)!^2 (2n-1/2)!(2n)! n!^2)
        HyperTerm B(rat(1), rat(1, 2304), rat(-3, 64), {});
        B.fact(0, 2, 0, +1)
            .fact(2, 2, 0, +1)
            .fact(2, -1, kMinusHalf, +1)
            .fact(4, 0, 0, +1)
            .fact(0, 1, 0, -1)
            .fact(1, 1, 0, -2)
            .fact(2, 0, kMinusHalf, -1)
            .fact(2, 0, 0, -1)
            .fact(1, 0, 0, -2);
        v.push_back(make("id6-pair", 6, "(11)", B,
                         RatFunc(36 * n * n, 4 * n - 2 * k - 1),
                         RatFunc(8 * n + 2 * k + 1)));
    }

    // ---- identity 7 ----
    {
        // B = (-1)^k 3^k/(2^12n 3^n 2^6k) (2n+2k)!(4n+2k)!(n-k-1/2)!(2n)!
        //     / ((2n+k)!^2 (n+k)!(n-1/2)! n!^3)
        HyperTerm B(rat(1), rat(1, 12288), rat(-3, 64), {});
        B.fact(2, 2, 0, +1)
            .fact(4, 2, 0, +1)
            .fact(1, -1, kMinusHalf, +1)
            .fact(2, 0, 0, +1)
            .fact(2, 1, 0, -2)
            .fact(1, 1, 0, -1)
            .fact(1, 0, kMinusHalf, -1)
            .fact(1, 0, 0, -3);
        v.push_back(make("id7-pair", 7, "(12)", B,
                         RatFunc(96 * n * n, 2 * n - 2 * k - 1),
                         RatFunc((2 * n + 2 * k + 1) * (28 * n + 2 * k + 3) - 24 * k * n,
                                 2 * n + k + 1)));
    }

    // ---- identity 8 ----
    {
        // B = (-1)^n/(2^12n 2^8k) (2k)!^4 (2n)!^5 / ((n+k)!^4 k!^4 n!^6)
        HyperTerm B(rat(1), rat(-1, 4096), rat(1, 256), {});
        B.fact(0, 2, 0, +4).fact(2, 0, 0, +5).fact(1, 1, 0, -4).fact(0, 1, 0, -4).fact(1, 0, 0, -6);
        v.push_back(make("id8-pairA", 8, "(13)", B,
                         RatFunc(8 * n * (2 * n + 4 * k + 1)),
                         RatFunc(20 * n * n + 8 * n + 1 + 24 * k * n + 8 * k * k + 4 * k)));
    }
    {
        // B = (-1)^k (-1)^n/(2^12n 2^6k) (2n)!^4 (2n+2k)!(2k)!^2 (n-k-1/2)!
        //     / (n!^7 (n+k)!^3 k!^2 (n-1/2)!)
        HyperTerm B(rat(1), rat(-1, 4096), rat(-1, 64), {});
        B.fact(2, 0, 0, +4)
            .fact(2, 2, 0, +1)
            .fact(0, 2, 0, +2)
            .fact(1, -1, kMinusHalf, +1)
            .fact(1, 0, 0, -7)
            .fact(1, 1, 0, -3)
            .fact(0, 1, 0, -2)
            .fact(1, 0, kMinusHalf, -1);
        v.push_back(make("id8-pairB", 8, "(14)", B,
                         RatFunc(32 * n * n * n, 2 * n - 2 * k - 1),
                         RatFunc(20 * n * n + 12 * k * n + 8 * n + 2 * k + 1)));
    }

    // ---- identity 9 ----
    {
        // B = (-1)^n/(2^20n 2^8k) (2n+2k)!^4 (2n)!^5 / ((2n+k)!^4 (n+k)!^4 n!^6)
        HyperTerm B(rat(1), rat(-1, 1048576), rat(1, 256), {});
        B.fact(2, 2, 0, +4).fact(2, 0, 0, +5).fact(2, 1, 0, -4).fact(1, 1, 0, -4).fact(1, 0, 0, -6);
        const BiPoly p1 = 820 * n * n + 180 * n + 13 + 8 * k * k + 20 * k + 72 * n * k;
        const BiPoly p2 = 296 * n * k.pow(3) + 1056 * n.pow(2) * k.pow(2) + 1280 * n.pow(3) * k +
                          528 * n.pow(4) + 800 * n.pow(3) + 1344 * n.pow(2) * k +
                          608 * n * k.pow(2) + 28 * k.pow(3) + 408 * n.pow(2) + 384 * n * k +
                          40 * k.pow(2) + 72 * n + 16 * k + 1;
        v.push_back(make("id9-pairA", 9, "(16)", B,
                         RatFunc(128 * n * (6 * n + 4 * k + 1)),
                         RatFunc((2 * n + 2 * k + 1).pow(4) * p1 - p2 * (32 * n * k),
                                 (2 * n + k + 1).pow(4))));
    }
    {
        // B = (-1)^k (-1)^n/(2^20n 2^6k) (2n)!^4 (2n+2k)!^3 (n-k-1/2)!
        //     / (n!^7 (n+k)!^3 (2n+k)!^2 (n-1/2)!)
        HyperTerm B(rat(1), rat(-1, 1048576), rat(-1, 64), {});
        B.fact(2, 0, 0, +4)
            .fact(2, 2, 0, +3)
            .fact(1, -1, kMinusHalf, +1)
            .fact(1, 0, 0, -7)
            .fact(1, 1, 0, -3)
            .fact(2, 1, 0, -2)
            .fact(1, 0, kMinusHalf, -1);
        const BiPoly inner = 1312 * n.pow(3) + 1340 * n.pow(2) * k + 336 * n * k.pow(2) +
                             1456 * n.pow(2) + 828 * n * k + 40 * k.pow(2) + 472 * n + 79 * k + 36;
        v.push_back(make("id9-pairB", 9, "(17)", B,
                         RatFunc(2048 * n * n * n, 2 * n - 2 * k - 1),
                         RatFunc(820 * n * n + 180 * n + 13) +
                             RatFunc(k * inner, (2 * n + k + 1).pow(2))));
    }

    // ---- identity 10 ----
    {
        // B = 1/(2^16n 2^8k) (2k)!^2 (2n+2k)!^2 (4n)!(2n)!^2 / ((2n+k)!^2 (n+k)!^4 k!^2 n!^4)
        HyperTerm B(rat(1), rat(1, 65536), rat(1, 256), {});
        B.fact(0, 2, 0, +2)
            .fact(2, 2, 0, +2)
            .fact(4, 0, 0, +1)
            .fact(2, 0, 0, +2)
            .fact(2, 1, 0, -2)
            .fact(1, 1, 0, -4)
            .fact(0, 1, 0, -2)
            .fact(1, 0, 0, -4);
        const RatFunc t1 = RatFunc(120 * n * n + 34 * n + 3 + 32 * k * k + 128 * k * n + 16 * k,
                                   4 * n + 4 * k + 1);
        const RatFunc t2 = RatFunc(k * (32 * n.pow(3) + 8 * n.pow(2) * k + 16 * n + 6 * k * n +
                                        40 * n.pow(2) + k + 2),
                                   (4 * n + 4 * k + 1) * (2 * n + k + 1).pow(2));
        v.push_back(make("id10-pairA", 10, "(19)", B,
                         RatFunc(32 * n * (4 * n + 4 * k + 1)), t1 + t2));
    }
    {
        // B = (-1)^k/(2^16n 2^6k) (2n)!^2 (4n)!(2k)!^3 (2n-k-1/2)! / (n!^6 (n+k)!^2 k!^3 (2n-1/2)!)
        HyperTerm B(rat(1), rat(1, 65536), rat(-1, 64), {});
        B.fact(2, 0, 0, +2)
            .fact(4, 0, 0, +1)
            .fact(0, 2, 0, +3)
            .fact(2, -1, kMinusHalf, +1)
            .fact(1, 0, 0, -6)
            .fact(1, 1, 0, -2)
            .fact(0, 1, 0, -3)
            .fact(2, 0, kMinusHalf, -1);
        v.push_back(make("id10-pairB", 10, "(20)", B,
                         RatFunc(512 * n * n * n, 4 * n - 2 * k - 1),
                         RatFunc(120 * n * n + 84 * k * n + 34 * n + 10 * k + 3)));
    }

    return v;
}

} // namespace

const std::vector<WZPair>& all_certificates() {
    static const std::vector<WZPair> table = build_all();
    return table;
}

} // namespace wzs
