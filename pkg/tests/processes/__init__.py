"""
过程与模拟测试模块
"""
