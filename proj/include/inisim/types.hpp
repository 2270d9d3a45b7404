#ifndef INISIM_TYPES_HPP
#define INISIM_TYPES_HPP

#include <complex>
#include <cstddef>
#include <vector>

namespace inisim {

using cd = std::complex<double>;

/// Time-domain sample sequence with its sampling rate.
struct ComplexSignal {
    std::vector<cd> samples;
    double sample_rate_hz = 0.0;

    std::size_t size() const noexcept { return samples.size(); }
};

/// Frequency-domain symbol map: cells indexed (symbol, bin), zero where unallocated.
struct ResourceGrid {
    std::size_t fft_size = 0;
    std::size_t symbols = 0;
    std::vector<cd> cells; // row-major: symbol * fft_size + bin

    ResourceGrid() = default;
    ResourceGrid(std::size_t fft, std::size_t syms)
        : fft_size(fft), symbols(syms), cells(fft * syms, cd{0.0, 0.0}) {}

    cd& at(std::size_t symbol, std::size_t bin) { return cells[symbol * fft_size + bin]; }
    const cd& at(std::size_t symbol, std::size_t bin) const { return cells[symbol * fft_size + bin]; }
};

/// Half-open sample range [offset, offset + length) within a frame.
struct SymbolSpan {
    std::size_t offset = 0;
    std::size_t length = 0;

    bool operator==(const SymbolSpan&) const = default;
};

} // namespace inisim

#endif
