"""
Hurst 估计测试模块
"""
