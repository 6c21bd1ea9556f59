"""
子命令测试模块
"""
