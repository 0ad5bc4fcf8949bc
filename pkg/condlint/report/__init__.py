"""Report serialization for diagnostics and corpus statistics"""
